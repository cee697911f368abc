#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

namespace kbox {

/// Single-pass pull stream. Each call to next() produces the following value
/// or nullopt once exhausted. Usable directly in range-for.
template <typename T>
class Stream {
public:
    using Pull = std::function<std::optional<T>()>;

    explicit Stream(Pull pull) : pull_(std::move(pull)) {}

    std::optional<T> next() { return pull_(); }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = T;
        using difference_type = std::ptrdiff_t;
        using pointer = const T*;
        using reference = const T&;

        iterator() = default;
        explicit iterator(Stream* s) : stream_(s) { ++*this; }

        const T& operator*() const { return *current_; }
        const T* operator->() const { return &*current_; }
        iterator& operator++()
        {
            current_ = stream_->next();
            if (!current_) {
                stream_ = nullptr;
            }
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(const iterator& o) const { return stream_ == o.stream_; }

    private:
        Stream* stream_ = nullptr;
        std::optional<T> current_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

    std::size_t count()
    {
        std::size_t c = 0;
        while (next()) {
            ++c;
        }
        return c;
    }

    std::vector<T> collect()
    {
        std::vector<T> out;
        while (auto v = next()) {
            out.push_back(std::move(*v));
        }
        return out;
    }

private:
    Pull pull_;
};

} // namespace kbox
