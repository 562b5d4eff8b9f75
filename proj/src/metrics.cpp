#include "amr/metrics.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace amr {

namespace {

void require_same_props(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (std::set<std::string>(a.begin(), a.end()) != std::set<std::string>(b.begin(), b.end()))
        throw std::invalid_argument("distance requires models over the same atomic propositions");
}

std::set<std::string> state_set(const std::vector<std::string>& v) {
    return std::set<std::string>(v.begin(), v.end());
}

template <typename M>
std::set<std::pair<std::string, std::string>> named_edges(const M& m,
                                                          const std::set<std::pair<int, int>>& e) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : e) out.emplace(m.state_name(a), m.state_name(b));
    return out;
}

template <typename T>
size_t symmetric_difference_size(const std::set<T>& a, const std::set<T>& b) {
    size_t n = 0;
    for (const auto& x : a)
        if (!b.count(x)) ++n;
    for (const auto& x : b)
        if (!a.count(x)) ++n;
    return n;
}

// Common states whose label set differs; the function-graph symmetric
// difference contributes two pairs per changed state, halved to one.
template <typename M>
double label_term(const M& a, const M& b) {
    int changed = 0;
    for (int i = 0; i < a.state_count(); ++i) {
        const std::string& id = a.state_name(i);
        if (!b.has_state(id)) continue;
        if (a.label(i) != b.label(b.index_of(id))) ++changed;
    }
    return changed;
}

} // namespace

double distance_ks(const KripkeStructure& a, const KripkeStructure& b) {
    require_same_props(a.props(), b.props());
    double d = 0;
    d += symmetric_difference_size(state_set(a.states()), state_set(b.states()));
    d += symmetric_difference_size(named_edges(a, a.edges()), named_edges(b, b.edges()));
    d += label_term(a, b);
    return d;
}

double distance_kmts(const Kmts& a, const Kmts& b) {
    require_same_props(a.props(), b.props());
    double d = 0;
    d += symmetric_difference_size(state_set(a.states()), state_set(b.states()));

    enum Status { Absent, MayOnly, Must };
    auto statuses = [](const Kmts& m) {
        std::map<std::pair<std::string, std::string>, Status> st;
        for (const auto& [x, y] : m.may())
            st[{m.state_name(x), m.state_name(y)}] = m.has_must(x, y) ? Must : MayOnly;
        return st;
    };
    auto sa = statuses(a);
    auto sb = statuses(b);
    for (const auto& [e, s] : sa) {
        auto it = sb.find(e);
        if (it == sb.end() || it->second != s) ++d;
    }
    for (const auto& [e, s] : sb)
        if (!sa.count(e)) ++d;

    d += label_term(a, b);
    return d;
}

} // namespace amr
