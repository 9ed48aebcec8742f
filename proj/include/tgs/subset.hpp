#pragma once

#include "tgs/system.hpp"

#include <cassert>
#include <cstdint>
#include <vector>

namespace tgs {

// A subset of a system's carrier as a fixed-length membership bit vector.
// Values are plain; the owning system is passed alongside wherever the
// operation table is needed, and every such entry point checks that the
// lengths agree.
class state_subset {
public:
    state_subset() = default;
    explicit state_subset(std::uint32_t universe) : n_(universe), bits_(blocks(universe), 0) {}

    static state_subset full(std::uint32_t universe) {
        state_subset s(universe);
        for (std::uint32_t i = 0; i < universe; ++i)
            s.insert(i);
        return s;
    }
    static state_subset of(std::uint32_t universe, std::initializer_list<state_id> members) {
        state_subset s(universe);
        for (state_id i : members)
            s.insert(i);
        return s;
    }

    std::uint32_t universe() const { return n_; }

    bool contains(state_id i) const {
        assert(i < n_);
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }
    void insert(state_id i) {
        assert(i < n_);
        bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void erase(state_id i) {
        assert(i < n_);
        bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool empty() const {
        for (auto b : bits_)
            if (b)
                return false;
        return true;
    }
    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (auto b : bits_)
            c += static_cast<std::uint32_t>(__builtin_popcountll(b));
        return c;
    }

    bool includes(const state_subset& other) const {
        assert(n_ == other.n_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (other.bits_[i] & ~bits_[i])
                return false;
        return true;
    }

    state_subset operator&(const state_subset& other) const {
        assert(n_ == other.n_);
        state_subset r(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            r.bits_[i] = bits_[i] & other.bits_[i];
        return r;
    }
    state_subset operator|(const state_subset& other) const {
        assert(n_ == other.n_);
        state_subset r(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            r.bits_[i] = bits_[i] | other.bits_[i];
        return r;
    }

    bool operator==(const state_subset&) const = default;

    std::vector<state_id> members() const {
        std::vector<state_id> out;
        for (state_id i = 0; i < n_; ++i)
            if (contains(i))
                out.push_back(i);
        return out;
    }

private:
    static std::size_t blocks(std::uint32_t n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    std::uint32_t n_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace tgs
