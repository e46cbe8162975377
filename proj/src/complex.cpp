#include "filtcat/complex.hpp"

#include <algorithm>

#include "filtcat/error.hpp"

namespace filtcat {

FctPtr Complex::term(long n) const {
    if (in_range(n)) return terms_[n - lo];
    return std::make_shared<FctObj>(FctObj::zero(poset));
}

FctMor Complex::diff(long n) const {
    if (n >= lo && n + 1 <= hi()) return diffs_[n - lo];
    return zero_mor(term(n), term(n + 1));
}

Complex Complex::zero(PosetPtr p) {
    Complex c;
    c.poset = std::move(p);
    return c;
}

Complex Complex::single(const FctPtr& m, long deg) {
    Complex c;
    c.poset = m->poset;
    c.lo = deg;
    c.terms_ = {m};
    return c;
}

Complex Complex::make(PosetPtr p, long lo, std::vector<FctPtr> terms,
                      std::vector<FctMor> diffs, bool validate) {
    Complex c;
    c.poset = std::move(p);
    c.lo = lo;
    c.terms_ = std::move(terms);
    c.diffs_ = std::move(diffs);
    if (c.terms_.empty() ? !c.diffs_.empty() : c.diffs_.size() + 1 != c.terms_.size())
        throw ShapeMismatch("complex needs one differential between consecutive terms");
    if (validate) c.validate();
    return c;
}

void Complex::validate() const {
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i]->poset != poset) throw ValidationError("complex term on a different poset");
    for (size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].src != terms_[i] || diffs_[i].dst != terms_[i + 1])
            throw ValidationError("differential endpoints disagree with terms");
        diffs_[i].validate();
        if (i + 1 < diffs_.size() && !compose(diffs_[i + 1], diffs_[i]).is_zero())
            throw ComposeNonzero("d o d != 0 at degree " + std::to_string(lo + (long)i));
    }
}

FctMor ComplexMor::comp(long n) const {
    long idx = n - clo;
    if (idx >= 0 && idx < static_cast<long>(comp_.size())) return comp_[idx];
    return zero_mor(src.term(n), dst.term(n));
}

ComplexMor ComplexMor::make(Complex src, Complex dst, long clo, std::vector<FctMor> comp,
                            bool validate) {
    ComplexMor f;
    f.src = std::move(src);
    f.dst = std::move(dst);
    f.clo = clo;
    f.comp_ = std::move(comp);
    if (validate) f.validate();
    return f;
}

ComplexMor ComplexMor::zero(Complex src, Complex dst) {
    ComplexMor f;
    f.src = std::move(src);
    f.dst = std::move(dst);
    return f;
}

void ComplexMor::validate() const {
    long a = std::min(src.lo, dst.lo) - 1;
    long b = std::max(src.hi(), dst.hi());
    for (long n = a; n <= b; ++n) {
        FctMor lhs = compose(dst.diff(n), comp(n));
        FctMor rhs = compose(comp(n + 1), src.diff(n));
        if (!mor_equal(lhs, rhs))
            throw NotNatural("chain map fails to commute at degree " + std::to_string(n));
    }
}

Complex shift(const Complex& x, long k) {
    std::vector<FctPtr> terms;
    std::vector<FctMor> diffs;
    for (long n = x.lo; n <= x.hi(); ++n) terms.push_back(x.term(n));
    Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
    for (long n = x.lo; n < x.hi(); ++n) {
        FctMor d = x.diff(n);
        for (auto& c : d.comp) c = c.scaled(sign);
        diffs.push_back(std::move(d));
    }
    return Complex::make(x.poset, x.lo - k, std::move(terms), std::move(diffs), false);
}

CohomologyData cohomology(const Complex& x, long n) {
    CohomologyData h;
    h.cycles = fct_kernel(x.diff(n));
    ImageData bd = fct_image(x.diff(n - 1));
    FctMor j = factor_through_sub(bd.incl, h.cycles.incl);
    h.quot = fct_cokernel(j);
    h.obj = h.quot.obj;
    return h;
}

FctMor cohomology_map(const ComplexMor& f, long n, const CohomologyData& hx,
                      const CohomologyData& hy) {
    FctMor on_cycles =
        factor_through_sub(compose(f.comp(n), hx.cycles.incl), hy.cycles.incl);
    return descend_through_quotient(compose(hy.quot.proj, on_cycles), hx.quot);
}

bool qis_check(const ComplexMor& f) {
    long a = std::min(f.src.lo, f.dst.lo) - 1;
    long b = std::max(f.src.hi(), f.dst.hi()) + 1;
    for (long n = a; n <= b; ++n) {
        CohomologyData hx = cohomology(f.src, n);
        CohomologyData hy = cohomology(f.dst, n);
        if (!cohomology_map(f, n, hx, hy).is_iso()) return false;
    }
    return true;
}

bool strictly_exact_in_degree(const Complex& x, long n) {
    return strictly_exact_pair(x.diff(n - 1), x.diff(n)).ok;
}

Complex truncate_le(const Complex& x, long n) {
    if (n >= x.hi()) return x;
    if (n < x.lo) return Complex::zero(x.poset);
    SubObject k = fct_kernel(x.diff(n));
    std::vector<FctPtr> terms;
    std::vector<FctMor> diffs;
    for (long m = x.lo; m < n; ++m) terms.push_back(x.term(m));
    terms.push_back(k.obj);
    for (long m = x.lo; m + 1 < n; ++m) diffs.push_back(x.diff(m));
    if (n > x.lo) diffs.push_back(factor_through_sub(x.diff(n - 1), k.incl));
    return Complex::make(x.poset, x.lo, std::move(terms), std::move(diffs), false);
}

Complex truncate_ge(const Complex& x, long n, Cat cat) {
    if (n <= x.lo) return x;
    if (n > x.hi()) return Complex::zero(x.poset);
    FctPtr co;
    FctMor mono;  // coim d^{n-1} -> X^n
    if (cat == Cat::Filt) {
        FiltOpResult r = filt_op(FiltOpKind::Coim, x.diff(n - 1));
        co = r.obj;
        mono = r.companion;
    } else {
        CoimageData r = fct_coimage(x.diff(n - 1));
        co = r.obj;
        mono = r.mono;
    }
    std::vector<FctPtr> terms{co};
    std::vector<FctMor> diffs{mono};
    for (long m = n; m <= x.hi(); ++m) terms.push_back(x.term(m));
    for (long m = n; m < x.hi(); ++m) diffs.push_back(x.diff(m));
    return Complex::make(x.poset, n - 1, std::move(terms), std::move(diffs), false);
}

ConeData mapping_cone(const ComplexMor& f) {
    const Complex& xs = f.src;
    const Complex& ys = f.dst;
    long lo = std::min(xs.lo - 1, ys.lo);
    long hi = std::max(xs.hi() - 1, ys.hi());
    ConeData out;
    out.parts_lo = lo;
    std::vector<FctPtr> terms;
    for (long n = lo; n <= hi; ++n) {
        out.parts.push_back(direct_sum(xs.term(n + 1), ys.term(n)));
        terms.push_back(out.parts.back().obj);
    }
    std::vector<FctMor> diffs;
    for (long n = lo; n < hi; ++n) {
        const BiproductData& a = out.parts[n - lo];
        const BiproductData& b = out.parts[n - lo + 1];
        FctMor d{a.obj, b.obj, {}};
        FctMor dx = xs.diff(n + 1);
        FctMor fy = f.comp(n + 1);
        FctMor dy = ys.diff(n);
        for (size_t l = 0; l < a.obj->n(); ++l) {
            RatMatrix m(b.obj->dims[l], a.obj->dims[l]);
            size_t rx = xs.term(n + 2)->dims[l];
            size_t cx = xs.term(n + 1)->dims[l];
            m.paste(-dx.comp[l], 0, 0);
            m.paste(fy.comp[l], rx, 0);
            m.paste(dy.comp[l], rx, cx);
            d.comp.push_back(std::move(m));
        }
        diffs.push_back(std::move(d));
    }
    out.cone = Complex::make(xs.poset, lo, std::move(terms), std::move(diffs), false);

    std::vector<FctMor> incl, proj;
    for (long n = lo; n <= hi; ++n) {
        const BiproductData& p = out.parts[n - lo];
        incl.push_back(p.inj2);
        proj.push_back(p.proj1);
    }
    out.incl_dst = ComplexMor::make(ys, out.cone, lo, std::move(incl), false);
    out.proj_shift = ComplexMor::make(out.cone, shift(xs, 1), lo, std::move(proj), false);
    return out;
}

ComplexMor cone_to_quotient(const ConeData& c, const ComplexMor& q) {
    std::vector<FctMor> comp;
    for (long n = c.parts_lo; n <= c.cone.hi(); ++n)
        comp.push_back(compose(q.comp(n), c.parts[n - c.parts_lo].proj2));
    return ComplexMor::make(c.cone, q.dst, c.parts_lo, std::move(comp));
}

LkappaData lkappa(const Complex& x) {
    std::vector<ReesResolution> res;
    for (long n = x.lo; n <= x.hi(); ++n) res.push_back(rees_resolution(x.term(n)));

    std::vector<FctPtr> kterms, rterms;
    std::vector<FctMor> kdiffs, rdiffs, iota, eps;
    for (size_t i = 0; i < res.size(); ++i) {
        kterms.push_back(res[i].k.obj);
        rterms.push_back(res[i].r.rees);
        iota.push_back(res[i].k.incl);
        eps.push_back(res[i].r.epsilon);
        if (i + 1 < res.size()) {
            FctMor rd = rees_mor(res[i].r, res[i + 1].r, x.diff(x.lo + (long)i));
            kdiffs.push_back(
                factor_through_sub(compose(rd, res[i].k.incl), res[i + 1].k.incl));
            rdiffs.push_back(std::move(rd));
        }
    }
    Complex kc = Complex::make(x.poset, x.lo, std::move(kterms), std::move(kdiffs), false);
    Complex rc = Complex::make(x.poset, x.lo, std::move(rterms), std::move(rdiffs), false);
    ComplexMor inc = ComplexMor::make(kc, rc, x.lo, std::move(iota), false);

    LkappaData out;
    ConeData cone = mapping_cone(inc);
    ComplexMor epsm = ComplexMor::make(rc, x, x.lo, std::move(eps), false);
    out.augmentation = cone_to_quotient(cone, epsm);
    out.total = std::move(cone.cone);
    for (long n = out.total.lo; n <= out.total.hi(); ++n)
        if (!is_filtered(*out.total.term(n)))
            throw AxiomFailure("resolution term is not filtered");
    if (!qis_check(out.augmentation))
        throw AxiomFailure("resolution augmentation is not a quasi-isomorphism");
    return out;
}

HeartObj functor_to_heart(const FctPtr& m) {
    ReesResolution r = rees_resolution(m);
    return HeartObj{r.k.incl};
}

QuotObject heart_to_functor(const HeartObj& h) { return fct_cokernel(h.e_incl); }

FctMor heart_round_trip(const FctPtr& m) {
    ReesResolution r = rees_resolution(m);
    QuotObject q = fct_cokernel(r.k.incl);
    return descend_through_quotient(r.r.epsilon, q);
}

}  // namespace filtcat
