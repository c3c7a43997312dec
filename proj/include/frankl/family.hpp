#pragma once

// Finite families of finite sets over non-negative integers.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frankl/error.hpp"
#include "frankl/text_io.hpp"

namespace frankl {

using Element = std::uint32_t;
using Member = std::vector<Element>;  // sorted, duplicate-free

// Canonical member order: by size, then lexicographically.
struct MemberOrder {
    bool operator()(const Member& a, const Member& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Member member_union(const Member& a, const Member& b) {
    Member out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Member normalize_member(Member m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

// The ground set is always the union of the members; ∅ is a member only when
// given explicitly.
class SetFamily {
public:
    SetFamily() = default;

    // Members are normalised (sorted, deduplicated elements); a repeated
    // member is rejected.
    explicit SetFamily(std::vector<Member> members) {
        for (auto& m : members) m = normalize_member(std::move(m));
        std::sort(members.begin(), members.end(), MemberOrder{});
        if (std::adjacent_find(members.begin(), members.end()) != members.end())
            throw InvalidInput("family has a repeated member");
        members_ = std::move(members);
    }

    const std::vector<Member>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    std::vector<Element> ground() const {
        std::set<Element> g;
        for (const auto& m : members_) g.insert(m.begin(), m.end());
        return {g.begin(), g.end()};
    }

    bool contains(const Member& m) const {
        return std::binary_search(members_.begin(), members_.end(), normalize_member(m), MemberOrder{});
    }

    bool has_empty() const { return !members_.empty() && members_.front().empty(); }

    // {∅} is the excluded trivial family.
    bool is_trivial() const { return members_.size() == 1 && members_.front().empty(); }

    SetFamily with_empty() const {
        if (has_empty()) return *this;
        auto m = members_;
        m.insert(m.begin(), Member{});
        return SetFamily(std::move(m));
    }

    bool operator==(const SetFamily&) const = default;

private:
    std::vector<Member> members_;
};

inline SetFamily union_closure(const std::vector<Member>& generators) {
    if (generators.empty()) throw InvalidInput("union_closure needs at least one generator");
    std::set<Member, MemberOrder> closed;
    std::vector<Member> work;
    for (const auto& g : generators) {
        auto m = normalize_member(g);
        if (closed.insert(m).second) work.push_back(std::move(m));
    }
    while (!work.empty()) {
        Member x = std::move(work.back());
        work.pop_back();
        std::vector<Member> fresh;
        for (const auto& y : closed) {
            auto z = member_union(x, y);
            if (!closed.count(z)) fresh.push_back(std::move(z));
        }
        for (auto& z : fresh)
            if (closed.insert(z).second) work.push_back(std::move(z));
    }
    return SetFamily(std::vector<Member>(closed.begin(), closed.end()));
}

inline bool is_union_closed(const SetFamily& f) {
    const auto& m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!f.contains(member_union(m[i], m[j]))) return false;
    return true;
}

inline std::map<Element, std::size_t> element_frequencies(const SetFamily& f) {
    std::map<Element, std::size_t> freq;
    for (const auto& m : f.members())
        for (auto e : m) ++freq[e];
    return freq;
}

// Elements lying in at least half of the members.
inline std::vector<Element> abundant_elements(const SetFamily& f) {
    if (f.empty() || f.is_trivial()) throw InvalidInput("abundance is undefined for the empty family and {∅}");
    std::vector<Element> out;
    for (auto [e, c] : element_frequencies(f))
        if (2 * c >= f.size()) out.push_back(e);
    return out;
}

// Family text format: one member per line as comma-separated integers, `-`
// for the empty set, `#` starts a comment line.
inline SetFamily parse_family(std::istream& in) {
    std::vector<Member> members;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string line;
        for (char c : raw)
            if (c != ' ' && c != '\t' && c != '\r') line += c;
        if (line.empty() || line[0] == '#') continue;
        Member m;
        if (line != "-") {
            std::size_t start = 0;
            while (true) {
                auto comma = line.find(',', start);
                auto tok = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                m.push_back(static_cast<Element>(detail::parse_unsigned(tok, number)));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            auto sorted = m;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw ParseError(number, "repeated element in member");
        }
        members.push_back(std::move(m));
    }
    try {
        return SetFamily(std::move(members));
    } catch (const InvalidInput& e) {
        throw ParseError(0, e.what());
    }
}

inline SetFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    return parse_family(in);
}

inline std::string serialize_member(const Member& m) {
    if (m.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(m[i]);
    }
    return out;
}

inline std::string serialize_family(const SetFamily& f) {
    std::string out;
    for (const auto& m : f.members()) out += serialize_member(m) + '\n';
    return out;
}

}  // namespace frankl
