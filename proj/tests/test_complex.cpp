#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filtcat/complex.hpp"
#include "filtcat/error.hpp"
#include "filtcat/generate.hpp"
#include "filtcat/instance.hpp"
#include "filtcat/linalg.hpp"

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

// shared across helpers: complexes insist on one poset pointer for all terms
static PosetPtr point() {
    static PosetPtr p = chain(1);
    return p;
}

static FctPtr vec(size_t d) {
    return make_fct(point(), {d}, {});
}

// one-point poset, terms are plain vector spaces
static Complex two_term(size_t d0, size_t d1, RatMatrix d) {
    FctPtr a = vec(d0), b = vec(d1);
    FctMor f{a, b, {std::move(d)}};
    return Complex::make(point(), 0, {a, b}, {f});
}

TEST_CASE("degree bookkeeping and out of range access") {
    Complex x = two_term(1, 1, RatMatrix::identity(1));
    CHECK(x.lo == 0);
    CHECK(x.hi() == 1);
    CHECK(x.term(5)->total_dim() == 0);
    CHECK(x.diff(-3).is_zero());
    x.validate();

    Complex z = Complex::zero(point());
    CHECK(z.length() == 0);

    FctPtr a = vec(1);
    FctMor ida = identity_mor(a);
    CHECK_THROWS_AS(Complex::make(point(), 0, {a, a, a}, {ida, ida}),
                    ComposeNonzero);
}

TEST_CASE("cohomology of elementary complexes") {
    Complex x = two_term(1, 1, RatMatrix::identity(1));
    CHECK(cohomology(x, 0).obj->total_dim() == 0);
    CHECK(cohomology(x, 1).obj->total_dim() == 0);

    Complex s = Complex::single(vec(3), 2);
    CHECK(cohomology(s, 2).obj->total_dim() == 3);
    CHECK(cohomology(s, 1).obj->total_dim() == 0);

    Complex inj = two_term(1, 2, mat({{1}, {0}}));
    CHECK(cohomology(inj, 0).obj->total_dim() == 0);
    CHECK(cohomology(inj, 1).obj->total_dim() == 1);
}

TEST_CASE("shift moves cohomology") {
    Rng rng(3);
    PosetPtr p = gen_poset(rng, 4);
    Complex x = gen_complex(rng, p, 2, 3, false);
    Complex y = shift(x, 1);
    y.validate();
    for (long n = x.lo - 2; n <= x.hi() + 1; ++n)
        CHECK(cohomology(y, n - 1).obj->dims == cohomology(x, n).obj->dims);
}

TEST_CASE("strict exactness in a degree") {
    PosetPtr p = chain(2);
    Complex z = Complex::zero(p);
    CHECK(strictly_exact_in_degree(z, 0));

    // the two-term resolution spread out as a three-term complex
    FctPtr c = std::make_shared<FctObj>(FctObj::constant(p, 1));
    ReesResolution rr = rees_resolution(c);
    Complex res = Complex::make(
        p, -1, {rr.k.obj, rr.r.rees, c}, {rr.k.incl, rr.r.epsilon});
    CHECK(strictly_exact_in_degree(res, -1));
    CHECK(strictly_exact_in_degree(res, 0));
    CHECK(strictly_exact_in_degree(res, 1));

    // f is mono and epi in the filtered category (its filtered cokernel
    // vanishes) yet not pointwise surjective, so exactness fails at the
    // target even though it holds at the source
    Instance ins = coim_vs_im_instance();
    FctMor f = ins.morphism("f");
    Complex nonstrict = Complex::make(ins.poset, 0, {f.src, f.dst}, {f});
    CHECK(cohomology(nonstrict, 0).obj->total_dim() == 0);
    CHECK(cohomology(nonstrict, 1).obj->dims ==
          std::vector<size_t>{1, 1, 1, 1, 0});
    CHECK(strictly_exact_in_degree(nonstrict, 0));
    CHECK_FALSE(strictly_exact_in_degree(nonstrict, 1));
}

TEST_CASE("truncations sandwich the complex") {
    Complex x = two_term(1, 1, RatMatrix::identity(1));
    Complex below = truncate_le(x, 0);
    // ker(id) = 0, so nothing survives
    CHECK(cohomology(below, 0).obj->total_dim() == 0);
    CHECK(below.hi() == 0);

    Complex above = truncate_ge(x, 1, Cat::Fct);
    above.validate();
    CHECK(above.lo == 0);
    CHECK(above.hi() == 1);
    // coim(id) = source, the complex is reproduced
    CHECK(above.term(0)->total_dim() == 1);
    CHECK(cohomology(above, 0).obj->total_dim() == 0);
    CHECK(cohomology(above, 1).obj->total_dim() == 0);
}

TEST_CASE("truncations preserve cohomology on the kept side") {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        PosetPtr p = gen_poset(rng, 4);
        Complex x = gen_complex(rng, p, 2, 3, false);
        if (x.length() < 2) continue;
        long mid = x.lo + 1;
        Complex le = truncate_le(x, mid);
        le.validate();
        for (long n = x.lo - 1; n <= mid; ++n)
            CHECK(cohomology(le, n).obj->dims == cohomology(x, n).obj->dims);
        for (long n = mid + 1; n <= x.hi(); ++n)
            CHECK(cohomology(le, n).obj->total_dim() == 0);

        Complex ge = truncate_ge(x, mid, Cat::Fct);
        ge.validate();
        for (long n = mid; n <= x.hi() + 1; ++n)
            CHECK(cohomology(ge, n).obj->dims == cohomology(x, n).obj->dims);
        for (long n = x.lo; n < mid; ++n)
            CHECK(cohomology(ge, n).obj->total_dim() == 0);
    }
}

TEST_CASE("cone of the identity is acyclic") {
    Rng rng(11);
    PosetPtr p = gen_poset(rng, 4);
    Complex x = gen_complex(rng, p, 2, 3, false);
    ComplexMor idm = ComplexMor::make(x, x, x.lo, [&] {
        std::vector<FctMor> c;
        for (long n = x.lo; n <= x.hi(); ++n) c.push_back(identity_mor(x.term(n)));
        return c;
    }());
    ConeData cd = mapping_cone(idm);
    cd.cone.validate();
    for (long n = cd.cone.lo - 1; n <= cd.cone.hi() + 1; ++n)
        CHECK(cohomology(cd.cone, n).obj->total_dim() == 0);
}

TEST_CASE("cone of zero splits") {
    Rng rng(13);
    PosetPtr p = gen_poset(rng, 4);
    Complex x = gen_complex(rng, p, 2, 2, false);
    Complex y = gen_complex(rng, p, 2, 2, false);
    ConeData cd = mapping_cone(ComplexMor::zero(x, y));
    for (long n = cd.cone.lo; n <= cd.cone.hi(); ++n) {
        size_t expect = cohomology(y, n).obj->total_dim() +
                        cohomology(x, n + 1).obj->total_dim();
        CHECK(cohomology(cd.cone, n).obj->total_dim() == expect);
    }
}

TEST_CASE("cone rotation is exact in the middle") {
    // H(Y) -> H(cone) -> H(X[1]) over the cone of a random one-term chain
    // map; middle exactness pins dim H(cone) = rank in + rank out, level by
    // level (the image of the first map is the kernel of the second)
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        PosetPtr p = gen_poset(rng, 4);
        FctPtr m = gen_functor(rng, p, 3);
        FctPtr n = gen_functor(rng, p, 3);
        FctMor f = gen_morphism(rng, m, n);
        Complex x = Complex::single(m, 0), y = Complex::single(n, 0);
        ComplexMor cf = ComplexMor::make(x, y, 0, {f});
        ConeData cd = mapping_cone(cf);
        cd.cone.validate();
        cd.incl_dst.validate();
        cd.proj_shift.validate();
        CHECK(cohomology(cd.cone, -1).obj->dims == fct_kernel(f).obj->dims);
        CHECK(cohomology(cd.cone, 0).obj->dims == fct_cokernel(f).obj->dims);
        Complex xs = shift(x, 1);
        for (long deg = cd.cone.lo; deg <= cd.cone.hi(); ++deg) {
            CohomologyData hy = cohomology(y, deg);
            CohomologyData hc = cohomology(cd.cone, deg);
            CohomologyData hx1 = cohomology(xs, deg);
            FctMor a = cohomology_map(cd.incl_dst, deg, hy, hc);
            FctMor b = cohomology_map(cd.proj_shift, deg, hc, hx1);
            CHECK(compose(b, a).is_zero());
            for (size_t l = 0; l < p->size(); ++l)
                CHECK(rank(a.at(l)) + rank(b.at(l)) == hc.obj->dims[l]);
        }
    }
}

TEST_CASE("quasi-isomorphism detection") {
    Rng rng(19);
    PosetPtr p = gen_poset(rng, 4);
    Complex x = gen_complex(rng, p, 2, 3, false);
    ComplexMor idm = ComplexMor::make(x, x, x.lo, [&] {
        std::vector<FctMor> c;
        for (long n = x.lo; n <= x.hi(); ++n) c.push_back(identity_mor(x.term(n)));
        return c;
    }());
    CHECK(qis_check(idm));
    // against zero: qis only when x is acyclic
    bool acyclic = true;
    for (long n = x.lo; n <= x.hi(); ++n)
        acyclic = acyclic && cohomology(x, n).obj->total_dim() == 0;
    CHECK(qis_check(ComplexMor::zero(x, Complex::zero(p))) == acyclic);
}

TEST_CASE("termwise resolution of a single filtered object") {
    PosetPtr p = chain(2);
    FctPtr m = make_fct(p, {1, 1}, {{{0, 1}, RatMatrix::identity(1)}});
    LkappaData lk = lkappa(Complex::single(m, 0));
    lk.total.validate();
    CHECK(lk.total.lo == -1);
    CHECK(lk.total.hi() == 0);
    for (long n = lk.total.lo; n <= lk.total.hi(); ++n)
        CHECK(is_filtered(*lk.total.term(n)));
    CHECK(qis_check(lk.augmentation));
    // strictly exact away from degree 0
    CHECK(strictly_exact_in_degree(lk.total, -1));
}

TEST_CASE("termwise resolution of a collapsing object") {
    PosetPtr p = chain(2);
    FctPtr m = make_fct(p, {1, 1}, {{{0, 1}, RatMatrix(1, 1)}});
    LkappaData lk = lkappa(Complex::single(m, 0));
    CHECK(lk.total.term(-1)->dims == std::vector<size_t>{0, 1});
    CHECK(lk.total.term(0)->dims == std::vector<size_t>{1, 2});
    CHECK(qis_check(lk.augmentation));
    // H^0 recovers m, H^-1 vanishes
    CHECK(cohomology(lk.total, 0).obj->dims == m->dims);
    CHECK(cohomology(lk.total, -1).obj->total_dim() == 0);
}

TEST_CASE("termwise resolution of the zero complex") {
    PosetPtr p = chain(2);
    LkappaData lk = lkappa(Complex::zero(p));
    lk.total.validate();
    for (long n = lk.total.lo; n <= lk.total.hi(); ++n)
        CHECK(lk.total.term(n)->total_dim() == 0);
    CHECK(qis_check(lk.augmentation));
}

TEST_CASE("heart correspondence round trips") {
    Rng rng(23);
    for (int t = 0; t < 10; ++t) {
        PosetPtr p = gen_poset(rng, 5);
        FctPtr m = gen_functor(rng, p, 3);
        HeartObj h = functor_to_heart(m);
        for (size_t l = 0; l < p->size(); ++l)
            CHECK(kernel_basis(h.e_incl.at(l)).cols() == 0);
        CHECK(is_filtered(*h.e_incl.src));
        CHECK(is_filtered(*h.e_incl.dst));
        FctMor rt = heart_round_trip(m);
        rt.validate();
        CHECK(rt.is_iso());
        CHECK(rt.dst == m);
    }
}

TEST_CASE("heart of an isomorphism and of a plain inclusion") {
    PosetPtr p = chain(2);
    FctPtr m = make_fct(p, {1, 1}, {{{0, 1}, RatMatrix::identity(1)}});
    // e_incl an isomorphism presents the zero functor
    HeartObj iso{identity_mor(m)};
    CHECK(heart_to_functor(iso).obj->total_dim() == 0);

    // 0 -> E presents E itself
    FctPtr z = std::make_shared<FctObj>(FctObj::zero(p));
    HeartObj incl{zero_mor(z, m)};
    QuotObject q = heart_to_functor(incl);
    CHECK(q.obj->dims == m->dims);
}
