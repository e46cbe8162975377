#include "filtcat/verify.hpp"

#include <functional>

#include "filtcat/complex.hpp"
#include "filtcat/error.hpp"
#include "filtcat/filtered.hpp"
#include "filtcat/generate.hpp"
#include "filtcat/linalg.hpp"
#include "filtcat/rees.hpp"
#include "filtcat/tensor.hpp"

namespace filtcat {

namespace {

struct Trial {
    std::vector<std::string> problems;
    void req(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

// The representable-style probe: one-dimensional on the up-set of mu,
// identity transitions inside it. Filtered, and morphisms out of it pick
// out elements, which makes factorization counting a linear-algebra rank.
FctPtr up_indicator(const PosetPtr& p, size_t mu) {
    size_t n = p->size();
    std::vector<size_t> dims(n, 0);
    for (size_t i = 0; i < n; ++i) dims[i] = p->leq(mu, i) ? 1 : 0;
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (auto& [a, b] : p->covers()) {
        RatMatrix t(dims[b], dims[a]);
        if (dims[a] && dims[b]) t.at(0, 0) = rat_of(1);
        maps[{a, b}] = std::move(t);
    }
    return std::make_shared<FctObj>(FctObj::make(p, std::move(dims), maps));
}

bool is_epi_top(const FctMor& f) {
    size_t top = f.src->poset->top();
    return rank(f.comp[top]) == f.dst->dims[top];
}

bool is_mono_pointwise(const FctMor& f) {
    for (size_t i = 0; i < f.src->n(); ++i)
        if (rank(f.comp[i]) != f.src->dims[i]) return false;
    return true;
}

FctMor mor_inverse(const FctMor& f) {
    FctMor g{f.dst, f.src, {}};
    for (const RatMatrix& c : f.comp) g.comp.push_back(inverse(c));
    return g;
}

RatMatrix flatten_columns(const std::vector<FctMor>& mors) {
    if (mors.empty()) return RatMatrix(0, 0);
    size_t rows = 0;
    for (const RatMatrix& c : mors[0].comp) rows += c.rows() * c.cols();
    RatMatrix m(rows, mors.size());
    for (size_t j = 0; j < mors.size(); ++j) {
        size_t r = 0;
        for (const RatMatrix& c : mors[j].comp)
            for (size_t rr = 0; rr < c.rows(); ++rr)
                for (size_t cc = 0; cc < c.cols(); ++cc) m.at(r++, j) = c.at(rr, cc);
    }
    return m;
}

// dim { g in span(basis) : post o g = 0 }
size_t dim_null_post(const std::vector<FctMor>& basis, const FctMor& post) {
    std::vector<FctMor> comps;
    for (const FctMor& g : basis) comps.push_back(compose(post, g));
    RatMatrix m = flatten_columns(comps);
    return basis.size() - rank(m);
}

// dim { u in span(basis) : u o pre = 0 }
size_t dim_null_pre(const std::vector<FctMor>& basis, const FctMor& pre) {
    std::vector<FctMor> comps;
    for (const FctMor& u : basis) comps.push_back(compose(u, pre));
    RatMatrix m = flatten_columns(comps);
    return basis.size() - rank(m);
}

std::string dims_str(const std::vector<size_t>& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

// ---- suite bodies ----

void trial_coim_vs_im(size_t, Rng&, const VerifyConfig&, Trial& t) {
    Instance ins = coim_vs_im_instance();
    const FctMor& f = ins.morphism("f");
    FiltOpResult im = filt_op(FiltOpKind::Im, f);
    FiltOpResult coim = filt_op(FiltOpKind::Coim, f);
    std::vector<size_t> im_expect{2, 3, 4, 5, 5}, coim_expect{1, 2, 3, 4, 5};
    t.req(im.obj->dims == im_expect, "im dims " + dims_str(im.obj->dims));
    t.req(coim.obj->dims == coim_expect, "coim dims " + dims_str(coim.obj->dims));
    t.req(is_mono_pointwise(f), "f should be mono");
    t.req(is_epi_top(f), "f should be epi");
    StrictnessReport s = strictness(f);
    t.req(!s.is_strict, "f should not be strict");
    t.req(is_mono_pointwise(s.coim_to_im), "coim -> im should be pointwise injective");
    FiltOpResult cz = filt_op(FiltOpKind::Coker, s.coim_to_im);
    t.req(cz.obj->total_dim() == 0, "coim -> im should have zero filtered cokernel");
}

void trial_filtops_oracle(size_t, Rng& rng, const VerifyConfig& cfg, Trial& t) {
    PosetPtr p = gen_poset(rng, cfg.max_poset);
    FctPtr a = gen_filtered(rng, p, cfg.max_dim);
    FctPtr b = gen_filtered(rng, p, cfg.max_dim);
    FctMor f = gen_morphism(rng, a, b);

    FiltOpResult ker = filt_op(FiltOpKind::Ker, f);
    FiltOpResult coker = filt_op(FiltOpKind::Coker, f);
    FiltOpResult im = filt_op(FiltOpKind::Im, f);
    FiltOpResult coim = filt_op(FiltOpKind::Coim, f);
    t.req(compose(f, ker.structural).is_zero(), "f o ker != 0");
    t.req(compose(coker.structural, f).is_zero(), "coker o f != 0");
    for (const FiltOpResult* r : {&ker, &coker, &im, &coim})
        t.req(is_filtered(*r->obj), "operation output not filtered");
    strictness(f);  // runs the built-in two-criteria consistency check

    // universal-property factorization counts against every probe
    for (size_t mu = 0; mu < p->size(); ++mu) {
        FctPtr probe = up_indicator(p, mu);
        std::string at = " at probe " + p->name(mu);
        size_t lhs = dim_null_post(hom_space(probe, a), f);
        t.req(lhs == hom_space(probe, ker.obj).size(), "kernel factorization count" + at);
        lhs = dim_null_pre(hom_space(b, probe), f);
        t.req(lhs == hom_space(coker.obj, probe).size(), "cokernel factorization count" + at);
        lhs = dim_null_post(hom_space(probe, b), coker.structural);
        t.req(lhs == hom_space(probe, im.obj).size(), "image factorization count" + at);
        lhs = dim_null_pre(hom_space(a, probe), ker.structural);
        t.req(lhs == hom_space(coim.obj, probe).size(), "coimage factorization count" + at);
    }

    // independent construction: cokernel and coimage through the pointwise
    // quotient followed by the reflection onto filtered objects
    {
        QuotObject q = fct_cokernel(f);
        FctMor g = descend_through_quotient(coker.structural, q);
        KappaData kq = kappa_obj(q.obj);
        FctMor cmp = adjoint_transpose(kq, g);
        t.req(cmp.is_iso(), "cokernel does not match the reflected pointwise quotient");
        t.req(mor_equal(compose(cmp, compose(kq.unit, q.proj)), coker.structural),
              "cokernel comparison square");
    }
    {
        QuotObject q = fct_cokernel(ker.structural);
        FctMor g = descend_through_quotient(coim.structural, q);
        KappaData kq = kappa_obj(q.obj);
        FctMor cmp = adjoint_transpose(kq, g);
        t.req(cmp.is_iso(), "coimage does not match the reflected pointwise quotient");
        t.req(mor_equal(compose(cmp, compose(kq.unit, q.proj)), coim.structural),
              "coimage comparison square");
    }
}

void trial_quasiab(size_t, Rng& rng, const VerifyConfig& cfg, Trial& t) {
    PosetPtr p = gen_poset(rng, cfg.max_poset);
    FctPtr a = gen_filtered(rng, p, cfg.max_dim);
    FctPtr b = gen_filtered(rng, p, cfg.max_dim);
    FctMor f = gen_morphism(rng, a, b);

    FctMor e = filt_op(FiltOpKind::Coker, f).structural;
    t.req(is_epi_top(e) && strictness(e).is_strict, "cokernel projection not a strict epi");
    FctPtr tt = gen_filtered(rng, p, cfg.max_dim);
    FctMor u = gen_morphism(rng, tt, e.dst);
    PullbackData pb = pullback(e, u);
    t.req(is_epi_top(pb.to_src_g), "base change of a strict epi lost surjectivity");
    t.req(strictness(pb.to_src_g).is_strict, "base change of a strict epi lost strictness");

    FctMor m = filt_op(FiltOpKind::Ker, f).structural;
    t.req(is_mono_pointwise(m) && strictness(m).is_strict, "kernel inclusion not a strict mono");
    FctPtr t2 = gen_filtered(rng, p, cfg.max_dim);
    FctMor u2 = gen_morphism(rng, m.src, t2);
    PushoutData po = pushout_filt(m, u2);
    t.req(is_mono_pointwise(po.from_dst_u), "cobase change of a strict mono lost injectivity");
    t.req(strictness(po.from_dst_u).is_strict, "cobase change of a strict mono lost strictness");
}

void trial_rees_resolution(size_t, Rng& rng, const VerifyConfig& cfg, Trial& t) {
    PosetPtr p = gen_poset(rng, cfg.max_poset);
    {
        Complex x = gen_complex(rng, p, cfg.max_dim, 3, false);
        LkappaData l = lkappa(x);
        t.req(qis_check(l.augmentation), "resolution augmentation not a quasi-isomorphism");

        std::vector<FctPtr> kterms;
        std::vector<KappaData> kd;
        for (long n = l.total.lo; n <= l.total.hi(); ++n) {
            kd.push_back(kappa_obj(l.total.term(n)));
            t.req(kd.back().unit.is_iso(), "resolution term not reflection-stable");
            kterms.push_back(kd.back().obj);
        }
        std::vector<FctMor> kdiffs;
        for (long n = l.total.lo; n < l.total.hi(); ++n)
            kdiffs.push_back(
                kappa_mor(kd[n - l.total.lo], kd[n + 1 - l.total.lo], l.total.diff(n)));
        Complex ktot = Complex::make(p, l.total.lo, kterms, kdiffs);
        std::vector<FctMor> comps;
        for (long n = l.total.lo; n <= l.total.hi(); ++n) {
            FctMor c = compose(l.augmentation.comp(n), mor_inverse(kd[n - l.total.lo].unit));
            comps.push_back(std::move(c));
        }
        ComplexMor back = ComplexMor::make(ktot, x, l.total.lo, comps);
        t.req(qis_check(back), "reflected total complex does not map back isomorphically");
    }
    {
        FctPtr nobj = gen_filtered(rng, p, cfg.max_dim);
        ReesResolution rr = rees_resolution(nobj);
        t.req(is_filtered(*rr.k.obj), "resolution kernel not filtered");
        t.req(is_mono_pointwise(rr.k.incl) && strictness(rr.k.incl).is_strict,
              "kernel inclusion not a strict mono");
        t.req(is_epi_top(rr.r.epsilon) && strictness(rr.r.epsilon).is_strict,
              "counit not a strict epi");
        t.req(strictly_exact_pair(rr.k.incl, rr.r.epsilon).ok,
              "two-term resolution not strictly exact");
    }
}

void trial_heart(size_t, Rng& rng, const VerifyConfig& cfg, Trial& t) {
    PosetPtr p = gen_poset(rng, cfg.max_poset);
    FctPtr m = gen_functor(rng, p, cfg.max_dim);
    FctMor cmp = heart_round_trip(m);
    t.req(cmp.is_iso(), "heart round trip comparison not an isomorphism");
}

void trial_rees_splittings(size_t, Rng& rng, const VerifyConfig& cfg, Trial& t) {
    PosetPtr p = gen_poset(rng, cfg.max_poset);
    FctPtr m = gen_functor(rng, p, cfg.max_dim);
    ReesStructure r = rees(m);
    for (auto& [a, b] : p->strict_pairs())
        t.req(r.rho(a, b) * r.rees->map(a, b) == RatMatrix::identity(r.rees->dims[a]),
              "rho does not split the transition " + p->name(a) + " <= " + p->name(b));
    for (size_t l = 0; l < p->size(); ++l)
        t.req(r.epsilon.comp[l] * r.sigma(l, l) == RatMatrix::identity(m->dims[l]),
              "epsilon does not split sigma at " + p->name(l));
}

void trial_adjunction(size_t, Rng& rng, const VerifyConfig& cfg, Trial& t) {
    PosetPtr p = gen_poset(rng, cfg.max_poset);
    FctPtr mp = gen_functor(rng, p, cfg.max_dim);
    FctPtr m = gen_filtered(rng, p, cfg.max_dim);
    KappaData k = kappa_obj(mp);

    FctMor f = gen_morphism(rng, mp, m);
    FctMor g = adjoint_transpose(k, f);
    t.req(mor_equal(adjoint_transpose_inv(k, g), f), "transpose round trip (from plain hom)");

    FctMor h = gen_morphism(rng, k.obj, m);
    FctMor f2 = adjoint_transpose_inv(k, h);
    t.req(mor_equal(adjoint_transpose(k, f2), h), "transpose round trip (from filtered hom)");

    t.req(hom_space(mp, m).size() == hom_space(k.obj, m).size(),
          "hom spaces across the adjunction differ in dimension");
}

void trial_kappa_tensor(size_t, Rng& rng, const VerifyConfig& cfg, Trial& t) {
    size_t nb = 1 + rng.below(cfg.max_bound);
    IndexMonoid mon(nb);
    size_t s1 = rng.below(nb + 1);
    size_t s2 = rng.below(nb - s1 + 1);
    FctPtr m1 = gen_stable(rng, mon.base(), cfg.max_dim, s1);
    FctPtr m2 = gen_stable(rng, mon.base(), cfg.max_dim, s2);
    KappaTensorWitness w = kappa_tensor_compat(mon, m1, m2);
    t.req(w.comparison.is_iso(), "comparison not an isomorphism");
}

void trial_tensor_dims(size_t idx, Rng&, const VerifyConfig&, Trial& t) {
    IndexMonoid mon(idx);
    LambdaRing a = truncated_polynomial_ring(mon);
    TensorStructure ts = tensor_fct(mon, a.carrier, a.carrier);
    for (size_t l = 0; l <= idx; ++l) {
        size_t expect = (l + 1) * (l + 2) / 2;  // monomial count oracle
        t.req(ts.obj->dims[l] == expect,
              "dim at level " + std::to_string(l) + " is " + std::to_string(ts.obj->dims[l]) +
                  ", expected " + std::to_string(expect));
    }
}

void trial_module_resolution(size_t, Rng& rng, const VerifyConfig& cfg, Trial& t) {
    size_t nb = 1 + rng.below(cfg.max_bound);
    IndexMonoid mon(nb);
    LambdaRing a = truncated_polynomial_ring(mon);
    LambdaModule m0 = gen_module(rng, a, cfg.max_dim);

    // the two-term resolution statement lives over filtered carriers, so
    // non-filtered generator output is reflected first
    LambdaModule m = is_filtered(*m0.carrier) ? m0 : kappa_module(a, m0).mod;
    ReesModuleData rm = rees_module(a, m);
    check_linear(a, rm.mod, m, rm.r.epsilon);
    t.req(is_filtered(*rm.mod.carrier), "Rees carrier not filtered");

    ModuleSub k = module_kernel(a, rm.mod, m, rm.r.epsilon);
    t.req(is_filtered(*k.mod.carrier), "resolution kernel not filtered");
    t.req(is_mono_pointwise(k.incl) && strictness(k.incl).is_strict,
          "kernel inclusion not a strict mono");
    t.req(is_epi_top(rm.r.epsilon) && strictness(rm.r.epsilon).is_strict,
          "counit not a strict epi");
    t.req(strictly_exact_pair(k.incl, rm.r.epsilon).ok, "module resolution not strictly exact");

    KappaModuleData km = kappa_module(a, m0);
    check_linear(a, m0, km.mod, km.k.unit);
    KappaModuleData km2 = kappa_module(a, km.mod);
    t.req(km2.k.unit.is_iso(), "reflection unit not invertible on a filtered module");
    check_linear(a, km.mod, km2.mod, km2.k.unit);
}

using TrialFn = void (*)(size_t, Rng&, const VerifyConfig&, Trial&);

struct SuiteDef {
    const char* id;
    TrialFn fn;
    size_t fixed_total;  // 0 means cfg.trials
};

const SuiteDef kSuites[] = {
    {"coim-vs-im", trial_coim_vs_im, 1},
    {"filtops-oracle", trial_filtops_oracle, 0},
    {"quasiab", trial_quasiab, 0},
    {"rees-resolution", trial_rees_resolution, 0},
    {"heart", trial_heart, 0},
    {"rees-splittings", trial_rees_splittings, 0},
    {"adjunction", trial_adjunction, 0},
    {"kappa-tensor", trial_kappa_tensor, 0},
    {"tensor-dims", trial_tensor_dims, 5},
    {"module-resolution", trial_module_resolution, 0},
};

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const SuiteDef& s : kSuites) v.push_back(s.id);
        return v;
    }();
    return ids;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
    std::string id = cfg.suite;
    if (id == "main1") id = "rees-resolution";
    if (id == "main2") id = "module-resolution";
    const SuiteDef* def = nullptr;
    for (const SuiteDef& s : kSuites)
        if (id == s.id) def = &s;
    if (!def) throw ValidationError("unknown verify suite '" + cfg.suite + "'");

    VerifyReport rep;
    rep.suite = def->id;
    rep.total = def->fixed_total ? def->fixed_total : cfg.trials;
    for (size_t i = 0; i < rep.total; ++i) {
        Rng rng(cfg.seed + i);
        Trial t;
        try {
            def->fn(i, rng, cfg, t);
        } catch (const std::exception& e) {
            t.problems.push_back(e.what());
        }
        if (t.problems.empty()) {
            ++rep.passed;
        } else {
            std::string msg;
            for (const std::string& prob : t.problems) msg += (msg.empty() ? "" : "; ") + prob;
            rep.failures.push_back({i, std::move(msg)});
        }
    }
    return rep;
}

}  // namespace filtcat
