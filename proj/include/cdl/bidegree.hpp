#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <vector>

namespace cdl {

// Bidegree (k,l): degree k in x and l in x-bar, partially ordered coordinatewise.
struct BiDegree {
    int k = 0;
    int l = 0;

    friend auto operator<=>(const BiDegree&, const BiDegree&) = default;

    // product order: this dominated by other
    bool dominated_by(const BiDegree& o) const { return k <= o.k && l <= o.l; }
    int total() const { return k + l; }
    BiDegree conj() const { return {l, k}; }
};

inline std::string to_string(const BiDegree& d) {
    return "(" + std::to_string(d.k) + "," + std::to_string(d.l) + ")";
}

// Finite downward-closed subset of N^2. Nonempty lower sets contain (0,0).
class LowerSet {
public:
    LowerSet() = default;
    explicit LowerSet(std::set<BiDegree> members) : members_(std::move(members)) {
        if (!is_downward_closed()) throw std::invalid_argument("LowerSet: not downward closed");
    }

    // smallest downward-closed superset of the given degrees
    static LowerSet closure(const std::vector<BiDegree>& maximal) {
        LowerSet out;
        for (const auto& d : maximal)
            for (int a = 0; a <= d.k; ++a)
                for (int b = 0; b <= d.l; ++b) out.members_.insert({a, b});
        return out;
    }

    static LowerSet total_degree(int cutoff) {
        LowerSet out;
        for (int k = 0; k <= cutoff; ++k)
            for (int l = 0; l + k <= cutoff; ++l) out.members_.insert({k, l});
        return out;
    }

    bool contains(const BiDegree& d) const { return members_.count(d) > 0; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    const std::set<BiDegree>& members() const { return members_; }

    std::vector<BiDegree> maximal_elements() const {
        std::vector<BiDegree> out;
        for (const auto& d : members_) {
            bool maximal = true;
            for (const auto& e : members_)
                if (e != d && d.dominated_by(e)) { maximal = false; break; }
            if (maximal) out.push_back(d);
        }
        return out;
    }

    // members ordered by total degree, higher k first within a degree block
    std::vector<BiDegree> graded_members() const {
        std::vector<BiDegree> out(members_.begin(), members_.end());
        std::sort(out.begin(), out.end(), [](const BiDegree& a, const BiDegree& b) {
            if (a.total() != b.total()) return a.total() < b.total();
            return a.k > b.k;
        });
        return out;
    }

    bool subset_of(const LowerSet& o) const {
        return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
    }

    friend bool operator==(const LowerSet&, const LowerSet&) = default;

private:
    bool is_downward_closed() const {
        for (const auto& d : members_)
            for (int a = 0; a <= d.k; ++a)
                for (int b = 0; b <= d.l; ++b)
                    if (!members_.count({a, b})) return false;
        return true;
    }

    std::set<BiDegree> members_;
};

// U*V = {(k+l', k'+l)}; not a lower set in general, caller may close it.
inline std::set<BiDegree> convolve(const LowerSet& U, const LowerSet& V) {
    std::set<BiDegree> out;
    for (const auto& u : U.members())
        for (const auto& v : V.members()) out.insert({u.k + v.l, v.k + u.l});
    return out;
}

inline LowerSet convolve_closed(const LowerSet& U, const LowerSet& V) {
    auto raw = convolve(U, V);
    return LowerSet::closure(std::vector<BiDegree>(raw.begin(), raw.end()));
}

inline std::string to_string(const LowerSet& s) {
    std::string out = "cl{";
    bool first = true;
    for (const auto& d : s.maximal_elements()) {
        if (!first) out += ",";
        out += to_string(d);
        first = false;
    }
    return out + "}";
}

}  // namespace cdl
