#include "kbox/generate.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>

namespace kbox {

namespace {

// Depth-first enumeration of words of length 2n over an ordered alphabet,
// where every prefix accepted by the pruning rule can be completed. Each
// call to next() resumes from the previously yielded leaf.
class WordSearch {
public:
    WordSearch(std::size_t semilength, bool allow_left) : n_(semilength), allow_left_(allow_left) {}

    std::optional<PathWord> next()
    {
        if (done_) {
            return std::nullopt;
        }
        if (!started_) {
            started_ = true;
            descend();
            return PathWord(steps_);
        }
        while (!steps_.empty()) {
            const Step last = steps_.back();
            pop();
            for (Step s : successors(last)) {
                if (feasible(s)) {
                    push(s);
                    descend();
                    return PathWord(steps_);
                }
            }
        }
        done_ = true;
        return std::nullopt;
    }

private:
    long height() const { return heights_.empty() ? 0 : heights_.back(); }

    bool feasible(Step s) const
    {
        const bool after_u = !steps_.empty() && steps_.back() == Step::U;
        const bool after_l = !steps_.empty() && steps_.back() == Step::L;
        switch (s) {
        case Step::U:
            return ups_ < n_ && !after_l;
        case Step::D:
            return height() > 0;
        case Step::L:
            // An L landing on the axis must end the word: only D or L may follow it.
            return allow_left_ && height() > 0 && !after_u && !(height() == 1 && ups_ < n_);
        }
        return false;
    }

    std::vector<Step> successors(Step s) const
    {
        std::vector<Step> out;
        if (s == Step::U) {
            out.push_back(Step::D);
        }
        if ((s == Step::U || s == Step::D) && allow_left_) {
            out.push_back(Step::L);
        }
        return out;
    }

    void push(Step s)
    {
        steps_.push_back(s);
        heights_.push_back(height() + (s == Step::U ? 1 : -1));
        if (s == Step::U) {
            ++ups_;
        }
    }

    void pop()
    {
        if (steps_.back() == Step::U) {
            --ups_;
        }
        steps_.pop_back();
        heights_.pop_back();
    }

    void descend()
    {
        while (steps_.size() < 2 * n_) {
            bool extended = false;
            for (Step s : {Step::U, Step::D, Step::L}) {
                if (feasible(s)) {
                    push(s);
                    extended = true;
                    break;
                }
            }
            if (!extended) {
                throw std::logic_error("skew Dyck search reached a dead end");
            }
        }
    }

    std::size_t n_;
    bool allow_left_;
    bool started_ = false;
    bool done_ = false;
    std::size_t ups_ = 0;
    std::vector<Step> steps_;
    std::vector<long> heights_;
};

// Parts are tried from largest to smallest, which makes the words come out
// in lexicographic order (a longer first ascent means a U where the other
// word has a D).
class CompositionSearch {
public:
    CompositionSearch(int k, std::size_t n)
        : k_(k), n_(static_cast<long>(n)), total_((k + 2) * static_cast<long>(n) - 1)
    {
    }

    std::optional<Composition> next()
    {
        if (done_ || n_ == 0) {
            done_ = true;
            return std::nullopt;
        }
        if (!started_) {
            started_ = true;
            descend();
            return Composition{k_, parts_};
        }
        while (!parts_.empty()) {
            const long v = parts_.back();
            parts_.pop_back();
            sum_ -= v;
            if (v - 1 >= lower()) {
                parts_.push_back(v - 1);
                sum_ += v - 1;
                descend();
                return Composition{k_, parts_};
            }
        }
        done_ = true;
        return std::nullopt;
    }

private:
    // Bounds for the next part given the current prefix.
    long lower() const
    {
        const long i = static_cast<long>(parts_.size()) + 1;
        if (i == n_) {
            return total_ - sum_;
        }
        return std::max(1L, (k_ + 2) * i - sum_);
    }

    long upper() const
    {
        const long i = static_cast<long>(parts_.size()) + 1;
        return total_ - sum_ - (n_ - i);
    }

    void descend()
    {
        while (static_cast<long>(parts_.size()) < n_) {
            const long v = upper();
            parts_.push_back(v);
            sum_ += v;
        }
    }

    int k_;
    long n_;
    long total_;
    long sum_ = 0;
    bool started_ = false;
    bool done_ = false;
    std::vector<long> parts_;
};

} // namespace

Stream<PathWord> generate_skew_dyck(std::size_t semilength)
{
    auto search = std::make_shared<WordSearch>(semilength, true);
    return Stream<PathWord>([search] { return search->next(); });
}

Stream<PathWord> generate_dyck(std::size_t semilength)
{
    auto search = std::make_shared<WordSearch>(semilength, false);
    return Stream<PathWord>([search] { return search->next(); });
}

Stream<Composition> generate_compositions(int k, std::size_t n)
{
    if (k < 1) {
        throw std::invalid_argument("generate_compositions: requires k >= 1");
    }
    auto search = std::make_shared<CompositionSearch>(k, n);
    return Stream<Composition>([search] { return search->next(); });
}

Stream<PathWord> generate_k_box(int k, std::size_t n)
{
    if (k < 0) {
        throw std::invalid_argument("generate_k_box: requires k >= 0");
    }
    if (n == 0) {
        return Stream<PathWord>([] { return std::optional<PathWord>(); });
    }
    if (k == 0) {
        return generate_dyck(n - 1);
    }
    auto search = std::make_shared<CompositionSearch>(k, n);
    return Stream<PathWord>([search]() -> std::optional<PathWord> {
        if (auto c = search->next()) {
            return path_of_composition(*c);
        }
        return std::nullopt;
    });
}

} // namespace kbox
