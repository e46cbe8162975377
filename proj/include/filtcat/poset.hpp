#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace filtcat {

// Orders element ids numerically when both parse as nonnegative integers,
// numbers before words, words lexicographically. Gives chains "0".."12" the
// expected order and stays a strict total order on arbitrary ids.
bool natural_less(const std::string& a, const std::string& b);

// Finite nonempty directed poset. Elements are kept in natural_less order and
// addressed by index; leq is the full reflexive-transitive closure.
// Directedness of a finite poset forces a unique maximum, exposed as top().
class IndexPoset {
public:
    // Builds from generating relation pairs (closure computed here). Throws
    // NotAntisymmetric on preorder collapse candidates (see reduce_preorder)
    // and NotDirected when some pair has no upper bound.
    static std::shared_ptr<const IndexPoset> make(
        std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& relations);

    size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name(size_t i) const { return elements_[i]; }
    size_t index(const std::string& id) const;
    bool has(const std::string& id) const { return by_name_.count(id) > 0; }

    bool leq(size_t a, size_t b) const { return leq_[a * size() + b]; }
    size_t top() const { return top_; }

    // Covering pairs (a, b): a < b with nothing strictly between, in
    // lexicographic (a, b) index order. The transitive reduction.
    const std::vector<std::pair<size_t, size_t>>& covers() const { return covers_; }
    // All strictly comparable pairs (a, b) with a < b, same order.
    const std::vector<std::pair<size_t, size_t>>& strict_pairs() const { return strict_; }

    bool is_chain() const;

private:
    IndexPoset() = default;
    std::vector<std::string> elements_;
    std::map<std::string, size_t> by_name_;
    std::vector<char> leq_;
    std::vector<std::pair<size_t, size_t>> covers_;
    std::vector<std::pair<size_t, size_t>> strict_;
    size_t top_ = 0;
};

using PosetPtr = std::shared_ptr<const IndexPoset>;

// Collapses a finite preorder (reflexive-transitive closure of the given
// relations) to its poset quotient: mutually comparable elements become one
// class named after the natural_less-least member. Idempotent on posets.
struct ReducedPreorder {
    PosetPtr poset;
    std::map<std::string, std::string> class_map;
};

ReducedPreorder reduce_preorder(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& relations);

// The index monoid for filtrations: {0, ..., bound} as a chain, with
// saturating addition add(a, b) = min(bound, a + b). Monotone in both
// arguments, commutative, associative, unit 0. Values beyond the bound are
// the model's stand-in for "the filtration has stabilized".
class IndexMonoid {
public:
    explicit IndexMonoid(size_t bound);

    size_t bound() const { return bound_; }
    const PosetPtr& base() const { return base_; }
    size_t add(size_t a, size_t b) const;
    // True when a + b stays inside the window without saturation.
    bool plain_in_range(size_t a, size_t b) const { return a + b <= bound_; }

    // Exhaustively checks unit, associativity, commutativity and
    // monotonicity; throws AxiomFailure with a witness triple.
    void validate() const;

private:
    size_t bound_;
    PosetPtr base_;
};

}  // namespace filtcat
