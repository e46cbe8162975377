#pragma once

#include <map>
#include <optional>
#include <string>

#include "filtcat/complex.hpp"
#include "filtcat/functor.hpp"
#include "filtcat/poset.hpp"
#include "filtcat/tensor.hpp"

namespace filtcat {

// A named-object workspace backed by one text file. The file carries either
// a poset or an index monoid (or both, which must agree); when a monoid is
// present its base chain is the poset every object lives on, so tensor and
// module operations can run without further glue.
struct Instance {
    PosetPtr poset;
    std::optional<IndexMonoid> mon;
    std::map<std::string, FctPtr> functors;
    std::map<std::string, FctMor> morphisms;
    std::map<std::string, Complex> complexes;
    std::map<std::string, LambdaRing> rings;
    std::map<std::string, LambdaModule> modules;
    std::map<std::string, std::string> module_ring;  // module name -> ring name

    // Lookup by name; throws ValidationError naming the missing entry.
    const FctPtr& functor(const std::string& name) const;
    const FctMor& morphism(const std::string& name) const;
    const Complex& complex(const std::string& name) const;
    const LambdaRing& ring(const std::string& name) const;
    const LambdaModule& module(const std::string& name) const;
    const IndexMonoid& monoid() const;
};

// Text form is JSON with rationals as strings ("p" or "p/q"). Every object
// is validated on load; failures carry the offending name. Saving emits the
// canonical form: covering transition maps only, elements in index order,
// all scalars as canonical rational strings. load(save(x)) == save-form(x).
Instance parse_instance_text(const std::string& text);
std::string instance_text(const Instance& ins);

Instance load_instance(const std::string& path);
void save_instance(const Instance& ins, const std::string& path);

// Serialization helpers shared with the command layer.
std::string matrix_json_text(const RatMatrix& m);

}  // namespace filtcat
