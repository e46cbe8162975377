#include "filtcat/poset.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "filtcat/error.hpp"

namespace filtcat {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Reflexive-transitive closure over element indices.
std::vector<char> closure(size_t n, const std::vector<std::pair<size_t, size_t>>& rel) {
    std::vector<char> leq(n * n, 0);
    for (size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (auto& [a, b] : rel) leq[a * n + b] = 1;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (leq[i * n + k])
                for (size_t j = 0; j < n; ++j)
                    if (leq[k * n + j]) leq[i * n + j] = 1;
    return leq;
}

std::vector<std::pair<size_t, size_t>> index_relations(
    const std::map<std::string, size_t>& by_name,
    const std::vector<std::pair<std::string, std::string>>& relations) {
    std::vector<std::pair<size_t, size_t>> rel;
    rel.reserve(relations.size());
    for (auto& [a, b] : relations) {
        auto ia = by_name.find(a), ib = by_name.find(b);
        if (ia == by_name.end() || ib == by_name.end())
            throw ValidationError("relation mentions unknown element '" +
                                  (ia == by_name.end() ? a : b) + "'");
        rel.emplace_back(ia->second, ib->second);
    }
    return rel;
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
    bool na = all_digits(a), nb = all_digits(b);
    if (na && nb) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
    if (na != nb) return na;
    return a < b;
}

std::shared_ptr<const IndexPoset> IndexPoset::make(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& relations) {
    if (elements.empty()) throw ValidationError("empty poset");
    std::sort(elements.begin(), elements.end(), natural_less);
    for (size_t i = 0; i + 1 < elements.size(); ++i)
        if (elements[i] == elements[i + 1])
            throw ValidationError("duplicate element '" + elements[i] + "'");

    auto p = std::shared_ptr<IndexPoset>(new IndexPoset());
    p->elements_ = std::move(elements);
    size_t n = p->elements_.size();
    for (size_t i = 0; i < n; ++i) p->by_name_[p->elements_[i]] = i;

    p->leq_ = closure(n, index_relations(p->by_name_, relations));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (p->leq_[i * n + j] && p->leq_[j * n + i])
                throw NotAntisymmetric("elements '" + p->elements_[i] + "' and '" +
                                       p->elements_[j] +
                                       "' are mutually comparable; use reduce_preorder");

    // Directedness; a finite directed poset has a maximum.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            bool ok = false;
            for (size_t u = 0; u < n && !ok; ++u)
                ok = p->leq_[i * n + u] && p->leq_[j * n + u];
            if (!ok)
                throw NotDirected("no upper bound for '" + p->elements_[i] + "', '" +
                                  p->elements_[j] + "'");
        }
    for (size_t t = 0; t < n; ++t) {
        bool is_top = true;
        for (size_t i = 0; i < n && is_top; ++i) is_top = p->leq_[i * n + t];
        if (is_top) {
            p->top_ = t;
            break;
        }
    }

    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            if (a == b || !p->leq_[a * n + b]) continue;
            p->strict_.emplace_back(a, b);
            bool cover = true;
            for (size_t m = 0; m < n && cover; ++m)
                if (m != a && m != b && p->leq_[a * n + m] && p->leq_[m * n + b]) cover = false;
            if (cover) p->covers_.emplace_back(a, b);
        }
    return p;
}

size_t IndexPoset::index(const std::string& id) const {
    auto it = by_name_.find(id);
    if (it == by_name_.end()) throw ValidationError("unknown element '" + id + "'");
    return it->second;
}

bool IndexPoset::is_chain() const {
    size_t n = size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!leq(i, j) && !leq(j, i)) return false;
    return true;
}

ReducedPreorder reduce_preorder(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& relations) {
    std::vector<std::string> sorted = elements;
    std::sort(sorted.begin(), sorted.end(), natural_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<std::string, size_t> by_name;
    for (size_t i = 0; i < sorted.size(); ++i) by_name[sorted[i]] = i;
    size_t n = sorted.size();
    std::vector<char> leq = closure(n, index_relations(by_name, relations));

    // Classes of mutual comparability; representative = natural_less-least
    // member, which is the first one met in sorted order.
    std::vector<size_t> cls(n, n);
    std::vector<std::string> reps;
    for (size_t i = 0; i < n; ++i) {
        if (cls[i] != n) continue;
        cls[i] = reps.size();
        for (size_t j = i + 1; j < n; ++j)
            if (leq[i * n + j] && leq[j * n + i]) cls[j] = reps.size();
        reps.push_back(sorted[i]);
    }

    std::vector<std::pair<std::string, std::string>> qrel;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (leq[i * n + j] && cls[i] != cls[j]) qrel.emplace_back(reps[cls[i]], reps[cls[j]]);

    ReducedPreorder out;
    out.poset = IndexPoset::make(reps, qrel);
    for (size_t i = 0; i < n; ++i) out.class_map[sorted[i]] = reps[cls[i]];
    return out;
}

IndexMonoid::IndexMonoid(size_t bound) : bound_(bound) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> rel;
    for (size_t i = 0; i <= bound; ++i) {
        ids.push_back(std::to_string(i));
        if (i > 0) rel.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    base_ = IndexPoset::make(std::move(ids), rel);
}

size_t IndexMonoid::add(size_t a, size_t b) const {
    if (a > bound_ || b > bound_) throw ValidationError("monoid element out of range");
    return std::min(bound_, a + b);
}

void IndexMonoid::validate() const {
    size_t n = bound_ + 1;
    for (size_t a = 0; a < n; ++a) {
        if (add(a, 0) != a || add(0, a) != a)
            throw AxiomFailure("unit law fails at " + std::to_string(a));
        for (size_t b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a))
                throw AxiomFailure("commutativity fails at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
            if (add(a, b) < a || add(a, b) < b)
                throw AxiomFailure("monotonicity fails at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
            for (size_t c = 0; c < n; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c)))
                    throw AxiomFailure("associativity fails at (" + std::to_string(a) + "," +
                                       std::to_string(b) + "," + std::to_string(c) + ")");
                // Monotonicity in each argument.
                if (b <= c && add(a, b) > add(a, c))
                    throw AxiomFailure("monotonicity fails at (" + std::to_string(a) + "," +
                                       std::to_string(b) + "<=" + std::to_string(c) + ")");
            }
        }
    }
}

}  // namespace filtcat
