#include "kbox/bijections.hpp"

#include <stdexcept>

namespace kbox {

namespace {

void require_box(const PathWord& p, int k, const char* op)
{
    if (k < 0) {
        throw std::invalid_argument(std::string(op) + ": k must be >= 0");
    }
    if (!classify(p, k).is_box()) {
        throw InvalidPath(std::string(op) + ": " + to_string(p) + " is not a " + std::to_string(k) + "-box path");
    }
}

} // namespace

std::vector<long> box_parts(const PathWord& p, int k)
{
    if (k >= 1) {
        return composition_of(p, k).parts;
    }
    require_box(p, 0, "box_parts");
    std::vector<long> parts;
    long run = 0;
    for (Step s : p.steps()) {
        if (s == Step::U) {
            ++run;
        } else {
            parts.push_back(run + 1);
            run = 0;
        }
    }
    parts.push_back(run + 1);
    return parts;
}

PathWord box_from_parts(const std::vector<long>& parts, int k)
{
    if (k >= 1) {
        return path_of_composition(Composition{k, parts});
    }
    if (k < 0) {
        throw std::invalid_argument("box_from_parts: k must be >= 0");
    }
    // 0-box template U^{a_1} L D ... U^{a_n} L: same sum and prefix rules with k = 0.
    const long n = static_cast<long>(parts.size());
    if (n == 0) {
        throw CompositionError("composition must have at least one part", 0);
    }
    long sum = 0;
    for (long i = 1; i <= n; ++i) {
        const long a = parts[static_cast<std::size_t>(i - 1)];
        if (a < 1) {
            throw CompositionError("part " + std::to_string(i) + " is not positive", static_cast<std::size_t>(i));
        }
        sum += a;
        if (i < n && sum < 2 * i) {
            throw CompositionError("prefix condition fails at i=" + std::to_string(i) + " (" + std::to_string(sum) +
                                       " < " + std::to_string(2 * i) + ")",
                                   static_cast<std::size_t>(i));
        }
    }
    if (sum != 2 * n - 1) {
        throw CompositionError("parts sum to " + std::to_string(sum) + ", expected 2n-1 = " + std::to_string(2 * n - 1),
                               0);
    }
    // Cancelling every UL leaves U^{a_1 - 1} D ... U^{a_{n-1} - 1} D U^{a_n - 1}.
    PathWord out;
    for (long i = 0; i < n; ++i) {
        out.append(Step::U, static_cast<std::size_t>(parts[static_cast<std::size_t>(i)] - 1));
        if (i + 1 < n) {
            out.push_back(Step::D);
        }
    }
    return out;
}

std::string to_string(const BoxDecomposition& d)
{
    std::string out;
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        if (i > 0) {
            out.push_back('|');
        }
        out += to_string(d.parts[i]);
    }
    return out;
}

BoxDecomposition decompose_box(const PathWord& p, int k)
{
    require_box(p, k, "decompose_box");
    if (k == 0) {
        return BoxDecomposition{0, {p}};
    }
    const std::vector<long> h = p.heights();
    BoxDecomposition d{k, {}};
    std::size_t pos = 0;
    for (long level = 0; level <= k; ++level) {
        std::vector<std::size_t> returns;
        for (std::size_t j = pos; j < p.size(); ++j) {
            if (p[j] != Step::U && h[j] == level) {
                returns.push_back(j);
            }
        }
        PathWord part;
        if (returns.size() >= 2) {
            const std::size_t penultimate = returns[returns.size() - 2];
            part = PathWord(std::vector<Step>(p.steps().begin() + static_cast<long>(pos),
                                              p.steps().begin() + static_cast<long>(penultimate) + 1));
            pos = penultimate + 1;
        }
        d.parts.push_back(std::move(part));
        if (pos >= p.size() || p[pos] != Step::U) {
            throw std::logic_error("decompose_box: expected a separating U at index " + std::to_string(pos));
        }
        ++pos;
    }
    for (const auto& part : d.parts) {
        if (!classify(part, k + 1).augmented_size) {
            throw std::logic_error("decompose_box: part " + to_string(part) + " is not augmented " +
                                   std::to_string(k + 1) + "-Dyck");
        }
    }
    if (compose_box(d) != p) {
        throw std::logic_error("decompose_box: reassembly mismatch for " + to_string(p));
    }
    return d;
}

PathWord compose_box(const BoxDecomposition& d)
{
    if (d.k < 0) {
        throw std::invalid_argument("compose_box: k must be >= 0");
    }
    if (d.parts.size() != static_cast<std::size_t>(d.k) + 1) {
        throw std::invalid_argument("compose_box: expected " + std::to_string(d.k + 1) + " parts, got " +
                                    std::to_string(d.parts.size()));
    }
    if (d.k == 0) {
        if (!classify(d.parts[0]).dyck) {
            throw InvalidPath("compose_box: the k = 0 part must be a Dyck path");
        }
        return d.parts[0];
    }
    PathWord out;
    for (const auto& part : d.parts) {
        if (!classify(part, d.k + 1).augmented_size) {
            throw InvalidPath("compose_box: part " + to_string(part) + " is not an augmented " +
                              std::to_string(d.k + 1) + "-Dyck path");
        }
        out.append(part);
        out.push_back(Step::U);
    }
    out.append(Step::D, static_cast<std::size_t>(d.k));
    out.push_back(Step::L);
    return out;
}

TreeTuple box_to_tree_tuple(const PathWord& p, int k)
{
    const BoxDecomposition d = decompose_box(p, k);
    TreeTuple out;
    if (k == 0) {
        out.trees.push_back(kdyck_to_tree(KDyckPath{1, box_to_raised_prefix(p, 0)}));
        return out;
    }
    for (const auto& part : d.parts) {
        out.trees.push_back(kdyck_to_tree(augmented_to_kdyck(part, k + 1)));
    }
    return out;
}

PathWord tree_tuple_to_box(const TreeTuple& t, int k)
{
    if (k < 0) {
        throw std::invalid_argument("tree_tuple_to_box: k must be >= 0");
    }
    if (t.trees.size() != static_cast<std::size_t>(k) + 1) {
        throw std::invalid_argument("tree_tuple_to_box: expected " + std::to_string(k + 1) + " trees");
    }
    for (const auto& tree : t.trees) {
        if (tree.arity() != k + 2) {
            throw std::invalid_argument("tree_tuple_to_box: expected arity " + std::to_string(k + 2));
        }
    }
    if (k == 0) {
        const KDyckPath dyck = tree_to_kdyck(t.trees[0]);
        PathWord out;
        for (KStep s : dyck.steps) {
            out.push_back(s == KStep::Up ? Step::U : Step::D);
        }
        return out;
    }
    BoxDecomposition d{k, {}};
    for (const auto& tree : t.trees) {
        d.parts.push_back(kdyck_to_augmented(tree_to_kdyck(tree)));
    }
    return compose_box(d);
}

std::size_t KtDyckPath::size() const
{
    std::size_t c = 0;
    for (KStep s : steps) {
        c += (s == KStep::Down) ? 1 : 0;
    }
    return c;
}

std::string to_string(const KtDyckPath& p)
{
    return to_string(KDyckPath{p.k, p.steps});
}

KtDyckPath parse_kt_dyck(std::string_view text, int k, int t)
{
    return KtDyckPath{k, t, parse_kdyck(text, k).steps};
}

bool is_valid(const KtDyckPath& p)
{
    if (p.k < 1 || p.t < 0 || p.t > p.k - 1) {
        return false;
    }
    const auto pr = profile(p.steps, p.k);
    return pr.min_height >= -p.t && pr.final_height == 0;
}

std::vector<KStep> box_to_raised_prefix(const PathWord& p, int k)
{
    const std::vector<long> parts = box_parts(p, k);
    std::vector<KStep> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out.insert(out.end(), static_cast<std::size_t>(parts[i] - 1), KStep::Up);
        if (i + 1 < parts.size()) {
            out.push_back(KStep::Down);
        }
    }
    return out;
}

KtDyckPath box_to_kt_dyck(const PathWord& p, int k)
{
    std::vector<KStep> prefix = box_to_raised_prefix(p, k);
    const auto kk = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < kk; ++i) {
        if (i >= prefix.size() || prefix[i] != KStep::Up) {
            throw std::logic_error("box_to_kt_dyck: raised prefix does not start with U^k");
        }
    }
    return KtDyckPath{k + 1, k, std::vector<KStep>(prefix.begin() + static_cast<long>(kk), prefix.end())};
}

PathWord kt_dyck_to_box(const KtDyckPath& q)
{
    if (q.t != q.k - 1) {
        throw std::invalid_argument("kt_dyck_to_box: expected a (k+1)_k-Dyck path, got k=" + std::to_string(q.k) +
                                    ", t=" + std::to_string(q.t));
    }
    if (!is_valid(q)) {
        throw InvalidPath("kt_dyck_to_box: " + to_string(q) + " is not a valid " + std::to_string(q.k) + "_" +
                          std::to_string(q.t) + "-Dyck path");
    }
    const int k = q.t;
    std::vector<long> parts;
    long run = k;
    for (KStep s : q.steps) {
        if (s == KStep::Up) {
            ++run;
        } else {
            parts.push_back(run + 1);
            run = 0;
        }
    }
    parts.push_back(run + 1);
    return box_from_parts(parts, k);
}

void validate(const ThresholdSequence& s)
{
    const long m = static_cast<long>(s.entries.size());
    const long upper = static_cast<long>(s.k) * m + s.l;
    for (long i = 1; i <= m; ++i) {
        const long v = s.entries[static_cast<std::size_t>(i - 1)];
        if (i > 1 && v <= s.entries[static_cast<std::size_t>(i - 2)]) {
            throw ThresholdError("entry " + std::to_string(i) + " is not larger than its predecessor",
                                 static_cast<std::size_t>(i));
        }
        if (v < s.k * i) {
            throw ThresholdError("entry " + std::to_string(i) + " = " + std::to_string(v) + " is below " +
                                     std::to_string(s.k * i),
                                 static_cast<std::size_t>(i));
        }
        if (v > upper) {
            throw ThresholdError("entry " + std::to_string(i) + " = " + std::to_string(v) + " exceeds " +
                                     std::to_string(upper),
                                 static_cast<std::size_t>(i));
        }
    }
}

ThresholdSequence box_to_threshold(const PathWord& p, int k)
{
    const std::vector<long> parts = box_parts(p, k);
    ThresholdSequence out{k + 2, k, {}};
    long sum = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        sum += parts[i];
        out.entries.push_back(sum);
    }
    return out;
}

PathWord threshold_to_box(const ThresholdSequence& s)
{
    if (s.l < 0 || s.k != s.l + 2) {
        throw std::invalid_argument("threshold_to_box: expected a (k+2, k)-threshold sequence");
    }
    validate(s);
    const int k = s.l;
    const long n = static_cast<long>(s.entries.size()) + 1;
    std::vector<long> parts;
    long prev = 0;
    for (long v : s.entries) {
        parts.push_back(v - prev);
        prev = v;
    }
    parts.push_back((k + 2) * n - 1 - prev);
    return box_from_parts(parts, k);
}

PathWord return_injection(const PathWord& p, int k)
{
    require_box(p, k, "return_injection");
    const std::vector<long> h = p.heights();
    std::size_t first_return = p.size();
    std::size_t returns = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != Step::U && h[i] == 0) {
            if (returns == 0) {
                first_return = i;
            }
            ++returns;
        }
    }
    if (returns < 2) {
        throw InvalidPath("return_injection: " + to_string(p) + " has fewer than two returns");
    }
    // A step ending on the axis before the end is always followed by U.
    std::vector<Step> steps = p.steps();
    steps.erase(steps.begin() + static_cast<long>(first_return) + 1);
    steps.insert(steps.begin(), Step::U);
    return PathWord(std::move(steps));
}

std::variant<PathWord, NotInvertible> return_injection_inverse(const PathWord& q, int k)
{
    require_box(q, k, "return_injection_inverse");
    const std::vector<long> h = q.heights();
    std::size_t target = q.size();
    for (std::size_t i = 1; i < q.size(); ++i) {
        if (q[i] != Step::U && h[i] == 1) {
            target = i;
            break;
        }
    }
    if (target == q.size()) {
        return NotInvertible{"no return to y = 1"};
    }
    std::vector<Step> steps = q.steps();
    steps.insert(steps.begin() + static_cast<long>(target) + 1, Step::U);
    steps.erase(steps.begin());
    PathWord candidate(std::move(steps));

    const PathClass c = classify(candidate, k);
    if (!c.is_box() || c.box_size != classify(q, k).box_size) {
        return NotInvertible{"first return to y = 1 at index " + std::to_string(target) +
                             " lies inside a D^kLD or the final D^kL factor"};
    }
    if (return_injection(candidate, k) != q) {
        throw std::logic_error("return_injection_inverse: candidate does not map back to " + to_string(q));
    }
    return candidate;
}

PathWord embed_all_long(const PathWord& p, int k)
{
    std::vector<long> parts = box_parts(p, k);
    for (auto& a : parts) {
        ++a;
    }
    return box_from_parts(parts, k + 1);
}

PathWord embed_all_long_inverse(const PathWord& q, int k)
{
    std::vector<long> parts = box_parts(q, k + 1);
    for (auto& a : parts) {
        if (a < 2) {
            throw InvalidPath("embed_all_long_inverse: " + to_string(q) + " has a short ascent");
        }
        --a;
    }
    return box_from_parts(parts, k);
}

} // namespace kbox
