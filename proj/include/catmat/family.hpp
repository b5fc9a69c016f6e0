#pragma once

#include <algorithm>
#include <vector>

#include "catmat/common.hpp"

namespace catmat {

/// A finite collection of subsets of {1..ground_size}; members are kept sorted and distinct.
class SetFamily {
public:
    SetFamily() = default;

    SetFamily(int ground_size, std::vector<Subset> members) : m_(ground_size), members_(std::move(members)) {
        if (ground_size < 0 || ground_size > kMaxGround) throw DomainError("ground size out of range");
        for (Subset s : members_)
            if ((s & ~full_set(m_)) != 0) throw DomainError("member " + to_string(s) + " outside ground set");
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    int ground_size() const { return m_; }
    const std::vector<Subset>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(Subset s) const { return std::binary_search(members_.begin(), members_.end(), s); }

    /// Members ordered lexicographically by their increasing element lists.
    std::vector<Subset> lex_sorted() const {
        std::vector<Subset> out = members_;
        std::sort(out.begin(), out.end(), lex_less);
        return out;
    }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    int m_ = 0;
    std::vector<Subset> members_;
};

}  // namespace catmat
