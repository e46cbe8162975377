#include "filtcat/functor.hpp"

#include <functional>

#include "filtcat/error.hpp"

namespace filtcat {

namespace {
std::string pair_str(const IndexPoset& p, size_t a, size_t b) {
    return "'" + p.name(a) + "' <= '" + p.name(b) + "'";
}
}  // namespace

const RatMatrix& FctObj::map(size_t a, size_t b) const {
    if (!poset->leq(a, b)) throw ValidationError("map requested for incomparable pair");
    return maps_[a * n() + b];
}

size_t FctObj::total_dim() const {
    size_t t = 0;
    for (size_t d : dims) t += d;
    return t;
}

FctObj FctObj::zero(PosetPtr p) { return constant(std::move(p), 0); }

FctObj FctObj::constant(PosetPtr p, size_t d) {
    FctObj m;
    m.poset = std::move(p);
    size_t n = m.poset->size();
    m.dims.assign(n, d);
    m.maps_.assign(n * n, RatMatrix());
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (m.poset->leq(a, b)) m.maps_[a * n + b] = RatMatrix::identity(d);
    return m;
}

FctObj FctObj::make(PosetPtr p, std::vector<size_t> dims,
                    const std::map<std::pair<size_t, size_t>, RatMatrix>& maps, bool validate) {
    FctObj m;
    m.poset = std::move(p);
    size_t n = m.poset->size();
    if (dims.size() != n) throw ShapeMismatch("dims size != poset size");
    m.dims = std::move(dims);
    m.maps_.assign(n * n, RatMatrix());
    std::vector<char> have(n * n, 0);
    for (size_t i = 0; i < n; ++i) {
        m.maps_[i * n + i] = RatMatrix::identity(m.dims[i]);
        have[i * n + i] = 1;
    }

    for (auto& [key, mat] : maps) {
        auto [a, b] = key;
        if (a == b) continue;
        if (!m.poset->leq(a, b))
            throw ValidationError("map given for incomparable pair " +
                                  pair_str(*m.poset, a, b));
        if (mat.rows() != m.dims[b] || mat.cols() != m.dims[a])
            throw ShapeMismatch("map shape for " + pair_str(*m.poset, a, b));
        m.maps_[a * n + b] = mat;
        have[a * n + b] = 1;
    }

    // Derive missing composites along cover chains; covering maps must be supplied.
    std::function<const RatMatrix&(size_t, size_t)> derive = [&](size_t a,
                                                                 size_t b) -> const RatMatrix& {
        if (have[a * n + b]) return m.maps_[a * n + b];
        for (auto& [ca, cb] : m.poset->covers()) {
            if (ca != a || cb == b || !m.poset->leq(cb, b)) continue;
            if (!have[a * n + cb]) continue;
            m.maps_[a * n + b] = derive(cb, b) * m.maps_[a * n + cb];
            have[a * n + b] = 1;
            return m.maps_[a * n + b];
        }
        throw ValidationError("missing transition map for " + pair_str(*m.poset, a, b) +
                              " (covering maps are required)");
    };
    for (auto& [a, b] : m.poset->strict_pairs()) derive(a, b);
    if (validate) m.validate();
    return m;
}

void FctObj::validate() const {
    size_t nn = n();
    for (size_t i = 0; i < nn; ++i)
        if (!maps_[i * nn + i].is_identity())
            throw FunctorLaw("identity transition at '" + poset->name(i) + "' is not id");
    for (auto& [a, b] : poset->strict_pairs()) {
        const RatMatrix& ab = map(a, b);
        if (ab.rows() != dims[b] || ab.cols() != dims[a])
            throw FunctorLaw("bad shape at " + pair_str(*poset, a, b));
        for (size_t c = 0; c < nn; ++c) {
            if (c == a || c == b || !poset->leq(b, c)) continue;
            if (map(b, c) * ab != map(a, c))
                throw FunctorLaw("composition fails along '" + poset->name(a) + "' <= '" +
                                 poset->name(b) + "' <= '" + poset->name(c) + "'");
        }
    }
}

bool FctObj::operator==(const FctObj& o) const {
    if (poset != o.poset || dims != o.dims) return false;
    return maps_ == o.maps_;
}

bool FctMor::is_zero() const {
    for (const auto& c : comp)
        if (!c.is_zero()) return false;
    return true;
}

bool FctMor::is_iso() const {
    for (const auto& c : comp)
        if (!is_invertible(c)) return false;
    return true;
}

void FctMor::validate() const {
    if (src->poset != dst->poset) throw ValidationError("morphism across different posets");
    size_t n = src->n();
    if (comp.size() != n) throw ShapeMismatch("component count");
    for (size_t i = 0; i < n; ++i)
        if (comp[i].rows() != dst->dims[i] || comp[i].cols() != src->dims[i])
            throw ShapeMismatch("component shape at '" + src->poset->name(i) + "'");
    for (auto& [a, b] : src->poset->covers())
        if (dst->map(a, b) * comp[a] != comp[b] * src->map(a, b))
            throw NotNatural("naturality fails on " + pair_str(*src->poset, a, b));
}

FctMor identity_mor(const FctPtr& m) {
    FctMor f{m, m, {}};
    for (size_t i = 0; i < m->n(); ++i) f.comp.push_back(RatMatrix::identity(m->dims[i]));
    return f;
}

FctMor zero_mor(const FctPtr& src, const FctPtr& dst) {
    FctMor f{src, dst, {}};
    for (size_t i = 0; i < src->n(); ++i) f.comp.push_back(RatMatrix(dst->dims[i], src->dims[i]));
    return f;
}

FctMor compose(const FctMor& g, const FctMor& f) {
    FctMor h{f.src, g.dst, {}};
    for (size_t i = 0; i < f.comp.size(); ++i) h.comp.push_back(g.comp[i] * f.comp[i]);
    return h;
}

FctMor mor_sub(const FctMor& a, const FctMor& b) {
    FctMor h{a.src, a.dst, {}};
    for (size_t i = 0; i < a.comp.size(); ++i) h.comp.push_back(a.comp[i] - b.comp[i]);
    return h;
}

bool mor_equal(const FctMor& a, const FctMor& b) { return a.comp == b.comp; }

ColimitCone diagram_colimit(const std::vector<size_t>& node_dims,
                            const std::vector<DiagramEdge>& edges) {
    ColimitCone cone;
    size_t total = 0;
    for (size_t d : node_dims) {
        cone.offsets.push_back(total);
        total += d;
    }
    size_t rel_cols = 0;
    for (const auto& e : edges) rel_cols += node_dims[e.from];
    RatMatrix rel(total, rel_cols);
    size_t c0 = 0;
    for (const auto& e : edges) {
        size_t df = node_dims[e.from];
        if (e.map.rows() != node_dims[e.to] || e.map.cols() != df)
            throw ShapeMismatch("diagram edge map shape");
        for (size_t c = 0; c < df; ++c) {
            for (size_t r = 0; r < e.map.rows(); ++r)
                rel.at(cone.offsets[e.to] + r, c0 + c) = e.map.at(r, c);
            rel.at(cone.offsets[e.from] + c, c0 + c) -= 1;
        }
        c0 += df;
    }
    CokernelData ck = cokernel_presentation(rel);
    cone.dim = ck.dim;
    cone.projection = std::move(ck.projection);
    cone.section = std::move(ck.section);
    for (size_t i = 0; i < node_dims.size(); ++i) {
        std::vector<size_t> idx(node_dims[i]);
        for (size_t j = 0; j < node_dims[i]; ++j) idx[j] = cone.offsets[i] + j;
        cone.legs.push_back(cone.projection.columns(idx));
    }
    return cone;
}

ColimitCone colimit(const FctObj& m) {
    std::vector<DiagramEdge> edges;
    for (auto& [a, b] : m.poset->covers()) edges.push_back({a, b, m.map(a, b)});
    ColimitCone cone = diagram_colimit(m.dims, edges);
    // Finite directed diagrams evaluate at the top; anything else is a bug.
    const RatMatrix& top_leg = cone.legs[m.poset->top()];
    if (top_leg.rows() != top_leg.cols() || !is_invertible(top_leg))
        throw ComparisonNotIso("colimit does not match evaluation at the top element");
    return cone;
}

RatMatrix colimit_map(const FctMor& f, const ColimitCone& src_cone,
                      const ColimitCone& dst_cone) {
    std::vector<RatMatrix> blocks;
    for (const auto& c : f.comp) blocks.push_back(c);
    RatMatrix big = block_diag(blocks);
    RatMatrix out = dst_cone.projection * big * src_cone.section;
    if (out * src_cone.projection != dst_cone.projection * big)
        throw ComparisonNotIso("colimit map not well defined (naturality broken)");
    return out;
}

SubObject sub_functor(const FctPtr& m, const std::vector<RatMatrix>& basis) {
    size_t n = m->n();
    std::vector<size_t> dims(n);
    for (size_t i = 0; i < n; ++i) {
        if (basis[i].rows() != m->dims[i]) throw ShapeMismatch("sub basis shape");
        dims[i] = basis[i].cols();
    }
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (auto& [a, b] : m->poset->strict_pairs())
        maps[{a, b}] = factor_through_mono(m->map(a, b) * basis[a], basis[b]);
    SubObject s;
    s.obj = std::make_shared<FctObj>(FctObj::make(m->poset, dims, maps));
    s.incl = FctMor{s.obj, m, basis};
    return s;
}

QuotObject quotient_functor(const FctPtr& m, const std::vector<CokernelData>& data) {
    size_t n = m->n();
    std::vector<size_t> dims(n);
    for (size_t i = 0; i < n; ++i) dims[i] = data[i].dim;
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (auto& [a, b] : m->poset->strict_pairs()) {
        RatMatrix g = data[b].projection * m->map(a, b) * data[a].section;
        if (g * data[a].projection != data[b].projection * m->map(a, b))
            throw ComparisonNotIso("quotient transition not well defined");
        maps[{a, b}] = std::move(g);
    }
    QuotObject q;
    q.obj = std::make_shared<FctObj>(FctObj::make(m->poset, dims, maps));
    q.proj = FctMor{m, q.obj, {}};
    for (size_t i = 0; i < n; ++i) {
        q.proj.comp.push_back(data[i].projection);
        q.sections.push_back(data[i].section);
    }
    return q;
}

SubObject fct_kernel(const FctMor& f) {
    std::vector<RatMatrix> basis;
    for (const auto& c : f.comp) basis.push_back(kernel_basis(c));
    return sub_functor(f.src, basis);
}

QuotObject fct_cokernel(const FctMor& f) {
    std::vector<CokernelData> data;
    for (const auto& c : f.comp) data.push_back(cokernel_presentation(c));
    return quotient_functor(f.dst, data);
}

ImageData fct_image(const FctMor& f) {
    std::vector<RatMatrix> basis;
    for (const auto& c : f.comp) basis.push_back(image_basis(c));
    SubObject s = sub_functor(f.dst, basis);
    ImageData out;
    out.obj = s.obj;
    out.incl = s.incl;
    out.epi = FctMor{f.src, s.obj, {}};
    for (size_t i = 0; i < f.comp.size(); ++i)
        out.epi.comp.push_back(factor_through_mono(f.comp[i], basis[i]));
    return out;
}

CoimageData fct_coimage(const FctMor& f) {
    std::vector<CokernelData> data;
    for (const auto& c : f.comp) data.push_back(cokernel_presentation(kernel_basis(c)));
    QuotObject q = quotient_functor(f.src, data);
    CoimageData out;
    out.obj = q.obj;
    out.proj = q.proj;
    out.mono = FctMor{q.obj, f.dst, {}};
    for (size_t i = 0; i < f.comp.size(); ++i) {
        RatMatrix m = f.comp[i] * q.sections[i];
        if (m * q.proj.comp[i] != f.comp[i])
            throw ComparisonNotIso("coimage mono part not well defined");
        out.mono.comp.push_back(std::move(m));
    }
    return out;
}

BiproductData direct_sum(const FctPtr& a, const FctPtr& b) {
    size_t n = a->n();
    std::vector<size_t> dims(n);
    for (size_t i = 0; i < n; ++i) dims[i] = a->dims[i] + b->dims[i];
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (auto& [x, y] : a->poset->strict_pairs()) {
        RatMatrix m(dims[y], dims[x]);
        m.paste(a->map(x, y), 0, 0);
        m.paste(b->map(x, y), a->dims[y], a->dims[x]);
        maps[{x, y}] = std::move(m);
    }
    BiproductData out;
    out.obj = std::make_shared<FctObj>(FctObj::make(a->poset, dims, maps));
    out.inj1 = FctMor{a, out.obj, {}};
    out.inj2 = FctMor{b, out.obj, {}};
    out.proj1 = FctMor{out.obj, a, {}};
    out.proj2 = FctMor{out.obj, b, {}};
    for (size_t i = 0; i < n; ++i) {
        size_t da = a->dims[i], db = b->dims[i];
        RatMatrix i1(da + db, da), i2(da + db, db), p1(da, da + db), p2(db, da + db);
        i1.paste(RatMatrix::identity(da), 0, 0);
        i2.paste(RatMatrix::identity(db), da, 0);
        p1.paste(RatMatrix::identity(da), 0, 0);
        p2.paste(RatMatrix::identity(db), 0, da);
        out.inj1.comp.push_back(std::move(i1));
        out.inj2.comp.push_back(std::move(i2));
        out.proj1.comp.push_back(std::move(p1));
        out.proj2.comp.push_back(std::move(p2));
    }
    return out;
}

std::vector<FctMor> hom_space(const FctPtr& m, const FctPtr& n, bool all_pairs) {
    size_t ne = m->n();
    std::vector<size_t> offset(ne);
    size_t unknowns = 0;
    for (size_t i = 0; i < ne; ++i) {
        offset[i] = unknowns;
        unknowns += n->dims[i] * m->dims[i];
    }
    const auto& pairs = all_pairs ? m->poset->strict_pairs() : m->poset->covers();
    size_t eq_rows = 0;
    for (auto& [a, b] : pairs) eq_rows += n->dims[b] * m->dims[a];
    RatMatrix sys(eq_rows, unknowns);
    size_t r0 = 0;
    for (auto& [a, b] : pairs) {
        const RatMatrix& nm = n->map(a, b);
        const RatMatrix& mm = m->map(a, b);
        for (size_t r = 0; r < n->dims[b]; ++r)
            for (size_t c = 0; c < m->dims[a]; ++c) {
                size_t row = r0 + r * m->dims[a] + c;
                for (size_t k = 0; k < n->dims[a]; ++k)
                    sys.at(row, offset[a] + k * m->dims[a] + c) += nm.at(r, k);
                for (size_t k = 0; k < m->dims[b]; ++k)
                    sys.at(row, offset[b] + r * m->dims[b] + k) -= mm.at(k, c);
            }
        r0 += n->dims[b] * m->dims[a];
    }
    RatMatrix kb = kernel_basis(sys);
    std::vector<FctMor> basis;
    for (size_t j = 0; j < kb.cols(); ++j) {
        FctMor f{m, n, {}};
        for (size_t i = 0; i < ne; ++i) {
            RatMatrix c(n->dims[i], m->dims[i]);
            for (size_t r = 0; r < n->dims[i]; ++r)
                for (size_t cc = 0; cc < m->dims[i]; ++cc)
                    c.at(r, cc) = kb.at(offset[i] + r * m->dims[i] + cc, j);
            f.comp.push_back(std::move(c));
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

FctMor mor_combination(const std::vector<FctMor>& basis, const std::vector<Rat>& coeffs,
                       const FctPtr& src, const FctPtr& dst) {
    FctMor f = zero_mor(src, dst);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < f.comp.size(); ++j)
            f.comp[j] = f.comp[j] + basis[i].comp[j].scaled(coeffs[i]);
    return f;
}

FctMor factor_through_sub(const FctMor& f, const FctMor& incl) {
    FctMor g{f.src, incl.src, {}};
    for (size_t i = 0; i < f.comp.size(); ++i)
        g.comp.push_back(factor_through_mono(f.comp[i], incl.comp[i]));
    return g;
}

FctMor descend_through_quotient(const FctMor& f, const QuotObject& q) {
    FctMor g{q.obj, f.dst, {}};
    for (size_t i = 0; i < f.comp.size(); ++i) {
        RatMatrix c = f.comp[i] * q.sections[i];
        if (c * q.proj.comp[i] != f.comp[i])
            throw ComparisonNotIso("descent through quotient not well defined");
        g.comp.push_back(std::move(c));
    }
    return g;
}

}  // namespace filtcat
