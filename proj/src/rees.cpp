#include "filtcat/rees.hpp"

#include <algorithm>

#include "filtcat/error.hpp"

namespace filtcat {

RatMatrix ReesStructure::sigma(size_t mu, size_t l) const {
    const auto& idx = summand_index[l];
    auto it = std::find(idx.begin(), idx.end(), mu);
    if (it == idx.end()) throw ValidationError("sigma: label is not below the target element");
    size_t off = summand_offset[l][it - idx.begin()];
    RatMatrix s(rees->dims[l], base->dims[mu]);
    s.paste(RatMatrix::identity(base->dims[mu]), off, 0);
    return s;
}

RatMatrix ReesStructure::rho(size_t a, size_t b) const {
    RatMatrix r(rees->dims[a], rees->dims[b]);
    const auto& ia = summand_index[a];
    const auto& ib = summand_index[b];
    for (size_t p = 0; p < ia.size(); ++p) {
        auto it = std::find(ib.begin(), ib.end(), ia[p]);
        if (it == ib.end()) throw ValidationError("rho: elements are not comparable");
        size_t q = it - ib.begin();
        r.paste(RatMatrix::identity(base->dims[ia[p]]), summand_offset[a][p],
                summand_offset[b][q]);
    }
    return r;
}

ReesStructure rees(const FctPtr& m) {
    size_t n = m->n();
    ReesStructure out;
    out.base = m;
    out.summand_index.resize(n);
    out.summand_offset.resize(n);
    std::vector<size_t> dims(n, 0);
    for (size_t l = 0; l < n; ++l) {
        for (size_t mu = 0; mu < n; ++mu) {
            if (!m->poset->leq(mu, l)) continue;
            out.summand_index[l].push_back(mu);
            out.summand_offset[l].push_back(dims[l]);
            dims[l] += m->dims[mu];
        }
    }
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (auto& [a, b] : m->poset->strict_pairs()) {
        RatMatrix t(dims[b], dims[a]);
        for (size_t p = 0; p < out.summand_index[a].size(); ++p) {
            size_t mu = out.summand_index[a][p];
            auto& ib = out.summand_index[b];
            size_t q = std::find(ib.begin(), ib.end(), mu) - ib.begin();
            t.paste(RatMatrix::identity(m->dims[mu]), out.summand_offset[b][q],
                    out.summand_offset[a][p]);
        }
        maps[{a, b}] = std::move(t);
    }
    out.rees = std::make_shared<FctObj>(FctObj::make(m->poset, dims, maps));
    out.epsilon = FctMor{out.rees, m, {}};
    for (size_t l = 0; l < n; ++l) {
        RatMatrix e(m->dims[l], dims[l]);
        for (size_t p = 0; p < out.summand_index[l].size(); ++p)
            e.paste(m->map(out.summand_index[l][p], l), 0, out.summand_offset[l][p]);
        out.epsilon.comp.push_back(std::move(e));
    }
    return out;
}

FctMor rees_mor(const ReesStructure& rs, const ReesStructure& rd, const FctMor& f) {
    FctMor g{rs.rees, rd.rees, {}};
    for (size_t l = 0; l < f.comp.size(); ++l) {
        std::vector<RatMatrix> blocks;
        for (size_t mu : rs.summand_index[l]) blocks.push_back(f.comp[mu]);
        g.comp.push_back(block_diag(blocks));
    }
    return g;
}

ReesResolution rees_resolution(const FctPtr& m) {
    ReesResolution out;
    out.r = rees(m);
    out.k = fct_kernel(out.r.epsilon);
    return out;
}

FctMor adjoint_transpose(const KappaData& k_src, const FctMor& f) {
    if (!is_filtered(*f.dst)) throw NotFiltered("transpose target must be filtered");
    size_t top = f.src->poset->top();
    FctMor g{k_src.obj, f.dst, {}};
    for (size_t l = 0; l < f.comp.size(); ++l)
        g.comp.push_back(
            factor_through_mono(f.comp[top] * k_src.incl[l], f.dst->map(l, top)));
    return g;
}

FctMor adjoint_transpose_inv(const KappaData& k_src, const FctMor& g) {
    FctMor f{k_src.unit.src, g.dst, {}};
    for (size_t l = 0; l < g.comp.size(); ++l)
        f.comp.push_back(g.comp[l] * k_src.unit.comp[l]);
    return f;
}

}  // namespace filtcat
