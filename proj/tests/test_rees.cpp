#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filtcat/error.hpp"
#include "filtcat/generate.hpp"
#include "filtcat/instance.hpp"
#include "filtcat/linalg.hpp"
#include "filtcat/rees.hpp"

using namespace filtcat;

static RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    return RatMatrix::from_int(rows);
}

static PosetPtr chain(size_t n) {
    std::vector<std::string> e;
    std::vector<std::pair<std::string, std::string>> r;
    for (size_t i = 0; i < n; ++i) e.push_back(std::to_string(i));
    for (size_t i = 0; i + 1 < n; ++i) r.emplace_back(e[i], e[i + 1]);
    return IndexPoset::make(std::move(e), r);
}

static FctPtr make_fct(PosetPtr p, std::vector<size_t> dims,
                       std::map<std::pair<size_t, size_t>, RatMatrix> maps) {
    return std::make_shared<FctObj>(FctObj::make(std::move(p), std::move(dims), maps));
}

TEST_CASE("summand bookkeeping on a chain") {
    PosetPtr p = chain(3);
    FctPtr m = std::make_shared<FctObj>(FctObj::constant(p, 1));
    ReesStructure r = rees(m);
    CHECK(r.rees->dims == std::vector<size_t>{1, 2, 3});
    CHECK(r.summand_index[2] == std::vector<size_t>{0, 1, 2});
    CHECK(is_filtered(*r.rees));
    r.epsilon.validate();
    // epsilon at the top sums the three copies
    CHECK(r.epsilon.at(2) == mat({{1, 1, 1}}));
}

TEST_CASE("zero object") {
    PosetPtr p = chain(2);
    FctPtr z = std::make_shared<FctObj>(FctObj::zero(p));
    ReesStructure r = rees(z);
    CHECK(r.rees->total_dim() == 0);
}

TEST_CASE("collapsing transition") {
    PosetPtr p = chain(2);
    FctPtr m = make_fct(p, {1, 1}, {{{0, 1}, RatMatrix(1, 1)}});
    ReesStructure r = rees(m);
    CHECK(r.rees->dims == std::vector<size_t>{1, 2});
    // summand order (0, 1): the first copy maps by the zero transition
    CHECK(r.epsilon.at(1) == mat({{0, 1}}));
    CHECK(r.epsilon.at(0) == mat({{1}}));
}

TEST_CASE("splitting identities") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        PosetPtr p = gen_poset(rng, 5);
        FctPtr m = gen_functor(rng, p, 3);
        ReesStructure r = rees(m);
        for (auto& [a, b] : p->strict_pairs()) {
            // rho splits the transition
            CHECK(r.rho(a, b) * r.rees->map(a, b) == RatMatrix::identity(r.rees->dims[a]));
            // epsilon restricted to summand mu is the base transition
            for (size_t mu : r.summand_index[b])
                CHECK(r.epsilon.at(b) * r.sigma(mu, b) == m->map(mu, b));
        }
        for (size_t l = 0; l < p->size(); ++l)
            CHECK(r.epsilon.at(l) * r.sigma(l, l) == RatMatrix::identity(m->dims[l]));
    }
}

TEST_CASE("functoriality") {
    Rng rng(19);
    for (int t = 0; t < 10; ++t) {
        PosetPtr p = gen_poset(rng, 5);
        FctPtr m = gen_functor(rng, p, 3);
        FctPtr n = gen_functor(rng, p, 3);
        FctMor f = gen_morphism(rng, m, n);
        FctMor g = gen_morphism(rng, n, m);
        ReesStructure rm = rees(m), rn = rees(n);
        FctMor rf = rees_mor(rm, rn, f);
        rf.validate();
        CHECK(mor_equal(rees_mor(rm, rm, identity_mor(m)), identity_mor(rm.rees)));
        CHECK(mor_equal(rees_mor(rm, rm, compose(g, f)),
                        compose(rees_mor(rn, rm, g), rf)));
        // epsilon is natural
        CHECK(mor_equal(compose(f, rm.epsilon), compose(rn.epsilon, rf)));
    }
}

TEST_CASE("pointwise exact sequences go to strictly exact ones") {
    Rng rng(27);
    for (int t = 0; t < 10; ++t) {
        PosetPtr p = gen_poset(rng, 4);
        FctPtr m = gen_functor(rng, p, 2);
        FctPtr n = gen_functor(rng, p, 2);
        FctMor f = gen_morphism(rng, m, n);
        SubObject k = fct_kernel(f);
        ImageData im = fct_image(f);
        // K -> M -> im f is pointwise short exact
        ReesStructure rk = rees(k.obj), rm = rees(m), ri = rees(im.obj);
        FctMor a = rees_mor(rk, rm, k.incl);
        FctMor b = rees_mor(rm, ri, im.epi);
        ExactnessReport ex = strictly_exact_pair(a, b);
        CHECK(ex.ok);
        CHECK(strictness(a).is_strict);
        CHECK(strictness(b).is_strict);
    }
}

TEST_CASE("two-term resolution on small examples") {
    PosetPtr p = chain(2);
    FctPtr c = std::make_shared<FctObj>(FctObj::constant(p, 1));
    ReesResolution rr = rees_resolution(c);
    CHECK(rr.k.obj->dims == std::vector<size_t>{0, 1});
    rr.k.incl.validate();
    CHECK(compose(rr.r.epsilon, rr.k.incl).is_zero());

    FctPtr z = std::make_shared<FctObj>(FctObj::zero(p));
    rr = rees_resolution(z);
    CHECK(rr.k.obj->total_dim() == 0);
}

TEST_CASE("resolution is pointwise exact and strict on random input") {
    Rng rng(33);
    for (int t = 0; t < 10; ++t) {
        PosetPtr p = gen_poset(rng, 5);
        FctPtr m = gen_functor(rng, p, 3);
        ReesResolution rr = rees_resolution(m);
        CHECK(is_filtered(*rr.k.obj));
        for (size_t l = 0; l < p->size(); ++l) {
            CHECK(kernel_basis(rr.k.incl.at(l)).cols() == 0);
            CHECK(rank(rr.r.epsilon.at(l)) == m->dims[l]);
            CHECK(rank(rr.k.incl.at(l)) + rank(rr.r.epsilon.at(l)) ==
                  rr.r.rees->dims[l]);
        }
    }
}

TEST_CASE("transposition across the adjunction") {
    PosetPtr p = chain(2);
    FctPtr c = std::make_shared<FctObj>(FctObj::constant(p, 1));
    KappaData k = kappa_obj(c);

    // unit transposes to the identity on the reflection
    FctMor tu = adjoint_transpose(k, k.unit);
    CHECK(mor_equal(tu, identity_mor(k.obj)));

    FctMor z = zero_mor(c, c);
    CHECK(adjoint_transpose(k, z).is_zero());
}

TEST_CASE("transposition is a bijection on hom spaces") {
    Rng rng(39);
    for (int t = 0; t < 10; ++t) {
        PosetPtr p = gen_poset(rng, 4);
        FctPtr m = gen_functor(rng, p, 2);
        FctPtr n = kappa_obj(gen_functor(rng, p, 2)).obj;
        KappaData k = kappa_obj(m);
        CHECK(hom_space(m, n).size() == hom_space(k.obj, n).size());
        for (const FctMor& f : hom_space(m, n)) {
            FctMor g = adjoint_transpose(k, f);
            g.validate();
            CHECK(mor_equal(adjoint_transpose_inv(k, g), f));
        }
        for (const FctMor& g : hom_space(k.obj, n)) {
            FctMor f = adjoint_transpose_inv(k, g);
            f.validate();
            CHECK(mor_equal(adjoint_transpose(k, f), g));
            // the two sides are linked by the unit
            CHECK(mor_equal(compose(g, k.unit), f));
        }
    }
}
