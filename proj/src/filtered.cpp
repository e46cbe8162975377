#include "filtcat/filtered.hpp"

#include "filtcat/error.hpp"

namespace filtcat {

FilteredWitness is_filtered_witness(const FctObj& m) {
    for (auto& [a, b] : m.poset->covers()) {
        RatMatrix kb = kernel_basis(m.map(a, b));
        if (kb.cols() == 0) continue;
        FilteredWitness w;
        w.ok = false;
        w.from = a;
        w.to = b;
        w.kernel_vec = kb.column(0);
        return w;
    }
    return {};
}

bool is_filtered(const FctObj& m) { return is_filtered_witness(m).ok; }

KappaData kappa_obj(const FctPtr& m) {
    size_t n = m->n();
    size_t top = m->poset->top();
    KappaData k;
    k.incl.reserve(n);
    std::vector<size_t> dims(n);
    for (size_t i = 0; i < n; ++i) {
        k.incl.push_back(image_basis(m->map(i, top)));
        dims[i] = k.incl.back().cols();
    }
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (auto& [a, b] : m->poset->strict_pairs())
        maps[{a, b}] = factor_through_mono(k.incl[a], k.incl[b]);
    k.obj = std::make_shared<FctObj>(FctObj::make(m->poset, dims, maps));
    k.unit = FctMor{m, k.obj, {}};
    for (size_t i = 0; i < n; ++i)
        k.unit.comp.push_back(factor_through_mono(m->map(i, top), k.incl[i]));
    return k;
}

FctMor kappa_mor(const KappaData& ks, const KappaData& kd, const FctMor& f) {
    size_t top = f.src->poset->top();
    FctMor g{ks.obj, kd.obj, {}};
    for (size_t i = 0; i < f.comp.size(); ++i)
        g.comp.push_back(factor_through_mono(f.comp[top] * ks.incl[i], kd.incl[i]));
    return g;
}

FiltOpResult filt_op(FiltOpKind kind, const FctMor& f) {
    const FctPtr& src = f.src;
    const FctPtr& dst = f.dst;
    size_t n = src->n();
    size_t top = src->poset->top();
    FiltOpResult out;

    switch (kind) {
        case FiltOpKind::Ker: {
            SubObject s = fct_kernel(f);
            out.obj = s.obj;
            out.structural = s.incl;
            return out;
        }
        case FiltOpKind::Coim: {
            std::vector<RatMatrix> basis;
            for (size_t i = 0; i < n; ++i) basis.push_back(image_basis(f.comp[i]));
            SubObject s = sub_functor(dst, basis);
            out.obj = s.obj;
            out.companion = s.incl;
            out.structural = FctMor{src, s.obj, {}};
            for (size_t i = 0; i < n; ++i)
                out.structural.comp.push_back(factor_through_mono(f.comp[i], basis[i]));
            return out;
        }
        default:
            break;
    }

    // Coker and Im both look at the composites dst(l) -> dst(top) -> coker f(top).
    CokernelData top_ck = cokernel_presentation(f.comp[top]);
    std::vector<RatMatrix> t(n);
    for (size_t i = 0; i < n; ++i) t[i] = top_ck.projection * dst->map(i, top);

    if (kind == FiltOpKind::Im) {
        std::vector<RatMatrix> basis;
        for (size_t i = 0; i < n; ++i) basis.push_back(kernel_basis(t[i]));
        SubObject s = sub_functor(dst, basis);
        out.obj = s.obj;
        out.structural = s.incl;
        out.companion = FctMor{src, s.obj, {}};
        for (size_t i = 0; i < n; ++i)
            out.companion.comp.push_back(factor_through_mono(f.comp[i], basis[i]));
        return out;
    }

    // Coker: value at l is the image of t[l] inside coker f(top).
    std::vector<RatMatrix> basis(n);
    std::vector<size_t> dims(n);
    for (size_t i = 0; i < n; ++i) {
        basis[i] = image_basis(t[i]);
        dims[i] = basis[i].cols();
    }
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (auto& [a, b] : src->poset->strict_pairs())
        maps[{a, b}] = factor_through_mono(basis[a], basis[b]);
    out.obj = std::make_shared<FctObj>(FctObj::make(src->poset, dims, maps));
    out.structural = FctMor{dst, out.obj, {}};
    for (size_t i = 0; i < n; ++i)
        out.structural.comp.push_back(factor_through_mono(t[i], basis[i]));
    return out;
}

FiltOpKind filt_op_kind(const std::string& name) {
    if (name == "ker") return FiltOpKind::Ker;
    if (name == "coker") return FiltOpKind::Coker;
    if (name == "im") return FiltOpKind::Im;
    if (name == "coim") return FiltOpKind::Coim;
    throw ValidationError("unknown operation '" + name + "' (expected ker/coker/im/coim)");
}

StrictnessReport strictness(const FctMor& f) {
    FiltOpResult im = filt_op(FiltOpKind::Im, f);
    FiltOpResult coim = filt_op(FiltOpKind::Coim, f);
    StrictnessReport rep;
    rep.coim_to_im = FctMor{coim.obj, im.obj, {}};
    bool iso = true;
    for (size_t i = 0; i < f.comp.size(); ++i) {
        rep.coim_to_im.comp.push_back(
            factor_through_mono(coim.companion.comp[i], im.structural.comp[i]));
        if (!is_invertible(rep.coim_to_im.comp.back())) iso = false;
    }
    rep.is_strict = iso;

    const FctPtr& dst = f.dst;
    size_t top = dst->poset->top();
    RatMatrix im_top = image_basis(f.comp[top]);
    bool cart_all = true;
    for (size_t i = 0; i < f.comp.size(); ++i) {
        RatMatrix glue = RatMatrix::hstack(dst->map(i, top), -im_top);
        size_t fibre = kernel_basis(glue).cols();
        bool ok = fibre == rank(f.comp[i]);
        rep.cartesian_ok.push_back(ok ? 1 : 0);
        if (!ok) cart_all = false;
    }
    if (cart_all != rep.is_strict)
        throw AxiomFailure("strictness criteria disagree (coim->im vs Cartesian square)");
    return rep;
}

ExactnessReport strictly_exact_pair(const FctMor& f, const FctMor& fp) {
    if (!compose(fp, f).is_zero()) throw ComposeNonzero("composite is not zero");
    ImageData im = fct_image(f);
    SubObject ker = fct_kernel(fp);
    ExactnessReport rep;
    rep.ok = true;
    for (size_t i = 0; i < f.comp.size(); ++i) {
        RatMatrix cmp = factor_through_mono(im.incl.comp[i], ker.incl.comp[i]);
        bool good = is_invertible(cmp);
        rep.at.push_back(good ? 1 : 0);
        if (!good) rep.ok = false;
    }
    return rep;
}

PullbackData pullback(const FctMor& f, const FctMor& g) {
    if (f.dst->poset != g.dst->poset || !(f.dst->dims == g.dst->dims))
        throw ValidationError("pullback needs a common codomain");
    BiproductData d = direct_sum(f.src, g.src);
    size_t n = f.src->n();
    std::vector<RatMatrix> basis(n);
    for (size_t i = 0; i < n; ++i)
        basis[i] = kernel_basis(RatMatrix::hstack(f.comp[i], -g.comp[i]));
    SubObject s = sub_functor(d.obj, basis);
    PullbackData out;
    out.obj = s.obj;
    out.to_src_f = compose(d.proj1, s.incl);
    out.to_src_g = compose(d.proj2, s.incl);
    return out;
}

PushoutData pushout_filt(const FctMor& f, const FctMor& u) {
    if (f.src->poset != u.src->poset || !(f.src->dims == u.src->dims))
        throw ValidationError("pushout needs a common domain");
    BiproductData d = direct_sum(f.dst, u.dst);
    FctMor h{f.src, d.obj, {}};
    for (size_t i = 0; i < f.comp.size(); ++i)
        h.comp.push_back(RatMatrix::vstack(f.comp[i], -u.comp[i]));
    QuotObject q = fct_cokernel(h);
    KappaData k = kappa_obj(q.obj);
    PushoutData out;
    out.obj = k.obj;
    out.from_dst_f = compose(k.unit, compose(q.proj, d.inj1));
    out.from_dst_u = compose(k.unit, compose(q.proj, d.inj2));
    return out;
}

}  // namespace filtcat
