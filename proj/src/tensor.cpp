#include "filtcat/tensor.hpp"

#include <array>
#include <functional>

#include "filtcat/error.hpp"

namespace filtcat {

namespace {

// Shared engine for levelwise colimits over nested node sets. Nodes live in
// a fixed universe; level l keeps those with node_level <= l, in universe
// order. Edges are given once on the universe and restricted per level.
struct UniverseEdge {
    size_t from, to;
    RatMatrix map;
};

struct GradedColimit {
    FctPtr obj;
    std::vector<ColimitCone> cones;
    std::vector<std::vector<size_t>> members;  // per level, universe indices
};

GradedColimit build_graded_colimit(const PosetPtr& chain, const std::vector<size_t>& node_level,
                                   const std::vector<size_t>& node_dim,
                                   const std::vector<UniverseEdge>& edges) {
    size_t n = chain->size();
    GradedColimit out;
    out.members.resize(n);
    out.cones.resize(n);
    std::vector<size_t> dims(n);
    std::vector<std::vector<size_t>> local(n, std::vector<size_t>(node_level.size(), SIZE_MAX));
    for (size_t l = 0; l < n; ++l) {
        for (size_t u = 0; u < node_level.size(); ++u) {
            if (node_level[u] > l) continue;
            local[l][u] = out.members[l].size();
            out.members[l].push_back(u);
        }
        std::vector<size_t> nd;
        for (size_t u : out.members[l]) nd.push_back(node_dim[u]);
        std::vector<DiagramEdge> de;
        for (const auto& e : edges)
            if (node_level[e.to] <= l) de.push_back({local[l][e.from], local[l][e.to], e.map});
        out.cones[l] = diagram_colimit(nd, de);
        dims[l] = out.cones[l].dim;
    }
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (auto& [a, b] : chain->covers()) {
        // Block inclusion of the level-a sum into the level-b sum.
        size_t ta = 0, tb = 0;
        for (size_t u : out.members[a]) ta += node_dim[u];
        for (size_t u : out.members[b]) tb += node_dim[u];
        RatMatrix e(tb, ta);
        for (size_t p = 0; p < out.members[a].size(); ++p) {
            size_t u = out.members[a][p];
            e.paste(RatMatrix::identity(node_dim[u]), out.cones[b].offsets[local[b][u]],
                    out.cones[a].offsets[p]);
        }
        RatMatrix t = out.cones[b].projection * e * out.cones[a].section;
        if (t * out.cones[a].projection != out.cones[b].projection * e)
            throw ComparisonNotIso("levelwise colimit transition not well defined");
        maps[{a, b}] = std::move(t);
    }
    out.obj = std::make_shared<FctObj>(FctObj::make(chain, dims, maps));
    return out;
}

void require_monoid_carrier(const IndexMonoid& mon, const FctPtr& m, const char* what) {
    if (m->poset != mon.base())
        throw ValidationError(std::string(what) + " must live on the monoid's index chain");
}

}  // namespace

size_t TensorStructure::local_index(size_t level, size_t u) const {
    size_t li = 0;
    for (size_t v = 0; v < u; ++v)
        if (universe[v].first + universe[v].second <= level) ++li;
    return li;
}

const RatMatrix& TensorStructure::leg(size_t level, size_t u) const {
    return cones[level].legs[local_index(level, u)];
}

TensorStructure tensor_fct(const IndexMonoid& mon, const FctPtr& m1, const FctPtr& m2) {
    require_monoid_carrier(mon, m1, "tensor factor");
    require_monoid_carrier(mon, m2, "tensor factor");
    size_t nb = mon.bound();
    TensorStructure ts;
    ts.m1 = m1;
    ts.m2 = m2;
    std::vector<size_t> level, dim;
    for (size_t i = 0; i <= nb; ++i)
        for (size_t j = 0; i + j <= nb; ++j) {
            ts.universe.emplace_back(i, j);
            level.push_back(i + j);
            dim.push_back(m1->dims[i] * m2->dims[j]);
        }
    auto uidx = [&](size_t i, size_t j) {
        for (size_t u = 0; u < ts.universe.size(); ++u)
            if (ts.universe[u] == std::make_pair(i, j)) return u;
        throw ValidationError("tensor node lookup failed");
    };
    std::vector<UniverseEdge> edges;
    for (size_t u = 0; u < ts.universe.size(); ++u) {
        auto [i, j] = ts.universe[u];
        if (i + j + 1 > nb) continue;
        edges.push_back({u, uidx(i + 1, j),
                         RatMatrix::kronecker(m1->map(i, i + 1), RatMatrix::identity(m2->dims[j]))});
        edges.push_back({u, uidx(i, j + 1),
                         RatMatrix::kronecker(RatMatrix::identity(m1->dims[i]), m2->map(j, j + 1))});
    }
    GradedColimit g = build_graded_colimit(mon.base(), level, dim, edges);
    ts.obj = g.obj;
    ts.cones = std::move(g.cones);
    return ts;
}

FctMor tensor_fct_mor(const TensorStructure& ts, const TensorStructure& td, const FctMor& f1,
                      const FctMor& f2) {
    if (ts.m1 != f1.src || ts.m2 != f2.src || td.m1 != f1.dst || td.m2 != f2.dst)
        throw ValidationError("tensor structures do not match the morphism endpoints");
    FctMor out{ts.obj, td.obj, {}};
    for (size_t l = 0; l < ts.obj->n(); ++l) {
        std::vector<RatMatrix> blocks;
        for (size_t u = 0; u < ts.universe.size(); ++u) {
            auto [i, j] = ts.universe[u];
            if (i + j > l) continue;
            blocks.push_back(RatMatrix::kronecker(f1.comp[i], f2.comp[j]));
        }
        RatMatrix big = block_diag(blocks);
        RatMatrix c = td.cones[l].projection * big * ts.cones[l].section;
        if (c * ts.cones[l].projection != td.cones[l].projection * big)
            throw ComparisonNotIso("tensor morphism not well defined on the presentation");
        out.comp.push_back(std::move(c));
    }
    return out;
}

TensorFiltData tensor_filt(const IndexMonoid& mon, const FctPtr& m1, const FctPtr& m2) {
    if (!is_filtered(*m1) || !is_filtered(*m2))
        throw NotFiltered("tensor_filt expects filtered factors");
    TensorFiltData out;
    out.plain = tensor_fct(mon, m1, m2);
    out.kap = kappa_obj(out.plain.obj);
    out.obj = out.kap.obj;
    return out;
}

KappaTensorWitness kappa_tensor_compat(const IndexMonoid& mon, const FctPtr& m1,
                                       const FctPtr& m2) {
    KappaData k1 = kappa_obj(m1);
    KappaData k2 = kappa_obj(m2);
    TensorStructure t_plain = tensor_fct(mon, m1, m2);
    KappaTensorWitness w;
    w.filt = tensor_filt(mon, k1.obj, k2.obj);
    FctMor t = tensor_fct_mor(t_plain, w.filt.plain, k1.unit, k2.unit);
    w.k_tensor = kappa_obj(t_plain.obj);
    w.comparison = kappa_mor(w.k_tensor, w.filt.kap, t);
    if (!w.comparison.is_iso())
        throw ComparisonNotIso("kappa does not commute with this tensor (window not stabilized)");
    return w;
}

AssocWitness tensor_assoc(const IndexMonoid& mon, const FctPtr& m1, const FctPtr& m2,
                          const FctPtr& m3) {
    size_t nb = mon.bound();
    // Direct triple colimit.
    std::vector<std::array<size_t, 3>> uni;
    std::vector<size_t> level, dim;
    for (size_t i = 0; i <= nb; ++i)
        for (size_t j = 0; i + j <= nb; ++j)
            for (size_t k = 0; i + j + k <= nb; ++k) {
                uni.push_back({i, j, k});
                level.push_back(i + j + k);
                dim.push_back(m1->dims[i] * m2->dims[j] * m3->dims[k]);
            }
    auto uidx = [&](size_t i, size_t j, size_t k) {
        for (size_t u = 0; u < uni.size(); ++u)
            if (uni[u] == std::array<size_t, 3>{i, j, k}) return u;
        throw ValidationError("triple node lookup failed");
    };
    auto node_map = [&](size_t u, int dir) {
        auto [i, j, k] = uni[u];
        RatMatrix i1 = RatMatrix::identity(m1->dims[i]);
        RatMatrix i2 = RatMatrix::identity(m2->dims[j]);
        RatMatrix i3 = RatMatrix::identity(m3->dims[k]);
        if (dir == 0) return RatMatrix::kronecker(m1->map(i, i + 1), RatMatrix::kronecker(i2, i3));
        if (dir == 1) return RatMatrix::kronecker(i1, RatMatrix::kronecker(m2->map(j, j + 1), i3));
        return RatMatrix::kronecker(RatMatrix::kronecker(i1, i2), m3->map(k, k + 1));
    };
    std::vector<UniverseEdge> edges;
    for (size_t u = 0; u < uni.size(); ++u) {
        auto [i, j, k] = uni[u];
        if (i + j + k + 1 > nb) continue;
        edges.push_back({u, uidx(i + 1, j, k), node_map(u, 0)});
        edges.push_back({u, uidx(i, j + 1, k), node_map(u, 1)});
        edges.push_back({u, uidx(i, j, k + 1), node_map(u, 2)});
    }
    GradedColimit g = build_graded_colimit(mon.base(), level, dim, edges);

    auto triple_leg = [&](size_t l, size_t i, size_t j, size_t k) -> const RatMatrix& {
        size_t u = uidx(i, j, k);
        size_t li = 0;
        for (size_t v = 0; v < u; ++v)
            if (level[v] <= l) ++li;
        return g.cones[l].legs[li];
    };

    AssocWitness w;
    w.triple = g.obj;

    // Left bracketing: nodes (p, k) carry T12(p) (x) M3(k); the comparison
    // is induced by the triple legs through the inner colimit sections.
    TensorStructure t12 = tensor_fct(mon, m1, m2);
    TensorStructure left = tensor_fct(mon, t12.obj, m3);
    w.from_left = FctMor{left.obj, w.triple, {}};
    for (size_t l = 0; l <= nb; ++l) {
        std::vector<RatMatrix> blocks;
        for (size_t u = 0; u < left.universe.size(); ++u) {
            auto [p, k] = left.universe[u];
            if (p + k > l) continue;
            // Cocone on the inner sum: node (i, j) of T12(p) tensored with
            // M3(k) goes through the triple leg at (i, j, k).
            size_t inner_total = 0;
            for (auto [i, j] : t12.universe)
                if (i + j <= p) inner_total += m1->dims[i] * m2->dims[j];
            RatMatrix u_mat(g.cones[l].dim, inner_total * m3->dims[k]);
            size_t off = 0;
            for (auto [i, j] : t12.universe) {
                if (i + j > p) continue;
                const RatMatrix& tl = triple_leg(l, i, j, k);
                u_mat.paste(tl, 0, off);
                off += tl.cols();
            }
            RatMatrix phi = u_mat * RatMatrix::kronecker(t12.cones[p].section,
                                                         RatMatrix::identity(m3->dims[k]));
            if (phi * RatMatrix::kronecker(t12.cones[p].projection,
                                           RatMatrix::identity(m3->dims[k])) != u_mat)
                throw ComparisonNotIso("associativity cocone not well defined (left inner)");
            blocks.push_back(std::move(phi));
        }
        RatMatrix assembled(g.cones[l].dim, 0);
        for (auto& b : blocks) assembled = RatMatrix::hstack(assembled, b);
        RatMatrix cmp = assembled * left.cones[l].section;
        if (cmp * left.cones[l].projection != assembled)
            throw ComparisonNotIso("associativity comparison not well defined (left outer)");
        w.from_left.comp.push_back(std::move(cmp));
    }

    // Right bracketing: nodes (i, q) carry M1(i) (x) T23(q). The inner sum
    // sits in the minor tensor position, so columns are interleaved.
    TensorStructure t23 = tensor_fct(mon, m2, m3);
    TensorStructure right = tensor_fct(mon, m1, t23.obj);
    w.from_right = FctMor{right.obj, w.triple, {}};
    for (size_t l = 0; l <= nb; ++l) {
        std::vector<RatMatrix> blocks;
        for (size_t u = 0; u < right.universe.size(); ++u) {
            auto [i, q] = right.universe[u];
            if (i + q > l) continue;
            size_t inner_total = 0;
            for (auto [j, k] : t23.universe)
                if (j + k <= q) inner_total += m2->dims[j] * m3->dims[k];
            size_t d1 = m1->dims[i];
            RatMatrix v_mat(g.cones[l].dim, d1 * inner_total);
            size_t off = 0;
            for (auto [j, k] : t23.universe) {
                if (j + k > q) continue;
                const RatMatrix& tl = triple_leg(l, i, j, k);
                size_t dn = m2->dims[j] * m3->dims[k];
                for (size_t a = 0; a < d1; ++a)
                    for (size_t t = 0; t < dn; ++t)
                        for (size_t r = 0; r < tl.rows(); ++r)
                            v_mat.at(r, a * inner_total + off + t) += tl.at(r, a * dn + t);
                off += dn;
            }
            RatMatrix phi = v_mat * RatMatrix::kronecker(RatMatrix::identity(d1),
                                                         t23.cones[q].section);
            if (phi * RatMatrix::kronecker(RatMatrix::identity(d1),
                                           t23.cones[q].projection) != v_mat)
                throw ComparisonNotIso("associativity cocone not well defined (right inner)");
            blocks.push_back(std::move(phi));
        }
        RatMatrix assembled(g.cones[l].dim, 0);
        for (auto& b : blocks) assembled = RatMatrix::hstack(assembled, b);
        RatMatrix cmp = assembled * right.cones[l].section;
        if (cmp * right.cones[l].projection != assembled)
            throw ComparisonNotIso("associativity comparison not well defined (right outer)");
        w.from_right.comp.push_back(std::move(cmp));
    }

    if (!w.from_left.is_iso() || !w.from_right.is_iso())
        throw ComparisonNotIso("iterated tensor does not match the triple colimit");
    return w;
}

const RatMatrix& LambdaRing::mult_at(size_t a, size_t b) const {
    auto it = mult.find({a, b});
    if (it == mult.end()) throw ValidationError("missing multiplication for an index pair");
    return it->second;
}

const RatMatrix& LambdaModule::action_at(size_t a, size_t b) const {
    auto it = action.find({a, b});
    if (it == action.end()) throw ValidationError("missing action for an index pair");
    return it->second;
}

namespace {

std::string pair_name(size_t a, size_t b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Shared functoriality/associativity driver: mm is the mult-or-action table
// of the "module" side (module = ring itself for rings).
void validate_table(const LambdaRing& a, const FctPtr& m,
                    const std::function<const RatMatrix&(size_t, size_t)>& mm,
                    const char* what) {
    size_t nb = a.mon.bound();
    const FctPtr& ac = a.carrier;
    for (size_t x = 0; x <= nb; ++x)
        for (size_t y = 0; y <= nb; ++y) {
            const RatMatrix& base = mm(x, y);
            if (base.rows() != m->dims[a.mon.add(x, y)] ||
                base.cols() != ac->dims[x] * m->dims[y])
                throw AxiomFailure(std::string(what) + " matrix shape at " + pair_name(x, y));
            for (size_t x2 = x + 1; x2 <= nb; ++x2) {
                RatMatrix lhs = mm(x2, y) * RatMatrix::kronecker(ac->map(x, x2),
                                                                 RatMatrix::identity(m->dims[y]));
                RatMatrix rhs = m->map(a.mon.add(x, y), a.mon.add(x2, y)) * base;
                if (lhs != rhs)
                    throw AxiomFailure(std::string(what) + " not functorial in the first index at " +
                                       pair_name(x, y) + " -> " + std::to_string(x2));
            }
            for (size_t y2 = y + 1; y2 <= nb; ++y2) {
                RatMatrix lhs = mm(x, y2) * RatMatrix::kronecker(RatMatrix::identity(ac->dims[x]),
                                                                 m->map(y, y2));
                RatMatrix rhs = m->map(a.mon.add(x, y), a.mon.add(x, y2)) * base;
                if (lhs != rhs)
                    throw AxiomFailure(std::string(what) +
                                       " not functorial in the second index at " + pair_name(x, y) +
                                       " -> " + std::to_string(y2));
            }
        }
    for (size_t x = 0; x <= nb; ++x)
        for (size_t y = 0; y <= nb; ++y)
            for (size_t z = 0; z <= nb; ++z) {
                RatMatrix lhs = mm(a.mon.add(x, y), z) *
                                RatMatrix::kronecker(a.mult_at(x, y),
                                                     RatMatrix::identity(m->dims[z]));
                RatMatrix rhs =
                    mm(x, a.mon.add(y, z)) *
                    RatMatrix::kronecker(RatMatrix::identity(a.carrier->dims[x]), mm(y, z));
                if (lhs != rhs)
                    throw AxiomFailure(std::string(what) + " associativity fails at (" +
                                       std::to_string(x) + ", " + std::to_string(y) + ", " +
                                       std::to_string(z) + ")");
            }
    if (a.has_unit) {
        for (size_t y = 0; y <= nb; ++y) {
            RatMatrix lhs = mm(0, y) * RatMatrix::kronecker(a.unit, RatMatrix::identity(m->dims[y]));
            if (!lhs.is_identity())
                throw AxiomFailure(std::string(what) + " unit law fails at " + std::to_string(y));
        }
    }
}

}  // namespace

void validate_ring(const LambdaRing& a) {
    require_monoid_carrier(a.mon, a.carrier, "ring carrier");
    if (a.has_unit && (a.unit.rows() != a.carrier->dims[0] || a.unit.cols() != 1))
        throw AxiomFailure("ring unit shape");
    validate_table(a, a.carrier, [&](size_t x, size_t y) -> const RatMatrix& {
        return a.mult_at(x, y);
    }, "multiplication");
    if (a.has_unit) {
        size_t nb = a.mon.bound();
        for (size_t x = 0; x <= nb; ++x) {
            RatMatrix rhs = a.mult_at(x, 0) *
                            RatMatrix::kronecker(RatMatrix::identity(a.carrier->dims[x]), a.unit);
            if (!rhs.is_identity())
                throw AxiomFailure("multiplication right unit law fails at " + std::to_string(x));
        }
    }
}

void validate_module(const LambdaRing& a, const LambdaModule& m) {
    require_monoid_carrier(a.mon, m.carrier, "module carrier");
    validate_table(a, m.carrier, [&](size_t x, size_t y) -> const RatMatrix& {
        return m.action_at(x, y);
    }, "action");
}

void check_linear(const LambdaRing& a, const LambdaModule& ms, const LambdaModule& md,
                  const FctMor& f) {
    size_t nb = a.mon.bound();
    for (size_t x = 0; x <= nb; ++x)
        for (size_t y = 0; y <= nb; ++y) {
            RatMatrix lhs = md.action_at(x, y) *
                            RatMatrix::kronecker(RatMatrix::identity(a.carrier->dims[x]),
                                                 f.comp[y]);
            RatMatrix rhs = f.comp[a.mon.add(x, y)] * ms.action_at(x, y);
            if (lhs != rhs)
                throw NotLinear("morphism is not ring-linear at " + pair_name(x, y));
        }
}

bool is_linear(const LambdaRing& a, const LambdaModule& ms, const LambdaModule& md,
               const FctMor& f) {
    try {
        check_linear(a, ms, md, f);
        return true;
    } catch (const NotLinear&) {
        return false;
    }
}

LambdaRing unit_object(const IndexMonoid& mon) {
    LambdaRing a{mon, {}, {}, true, RatMatrix::identity(1)};
    a.carrier = std::make_shared<FctObj>(FctObj::constant(mon.base(), 1));
    for (size_t x = 0; x <= mon.bound(); ++x)
        for (size_t y = 0; y <= mon.bound(); ++y) a.mult[{x, y}] = RatMatrix::identity(1);
    validate_ring(a);
    return a;
}

ModuleSub module_kernel(const LambdaRing& a, const LambdaModule& ms, const LambdaModule& md,
                        const FctMor& f) {
    check_linear(a, ms, md, f);
    SubObject k = fct_kernel(f);
    ModuleSub out;
    out.incl = k.incl;
    out.mod.carrier = k.obj;
    size_t nb = a.mon.bound();
    for (size_t x = 0; x <= nb; ++x)
        for (size_t y = 0; y <= nb; ++y) {
            RatMatrix into = ms.action_at(x, y) *
                             RatMatrix::kronecker(RatMatrix::identity(a.carrier->dims[x]),
                                                  k.incl.comp[y]);
            out.mod.action[{x, y}] =
                factor_through_mono(into, k.incl.comp[a.mon.add(x, y)]);
        }
    validate_module(a, out.mod);
    return out;
}

ModuleQuot module_cokernel(const LambdaRing& a, const LambdaModule& ms, const LambdaModule& md,
                           const FctMor& f) {
    check_linear(a, ms, md, f);
    QuotObject q = fct_cokernel(f);
    ModuleQuot out;
    out.proj = q.proj;
    out.sections = q.sections;
    out.mod.carrier = q.obj;
    size_t nb = a.mon.bound();
    for (size_t x = 0; x <= nb; ++x)
        for (size_t y = 0; y <= nb; ++y) {
            size_t s = a.mon.add(x, y);
            RatMatrix desc = q.proj.comp[s] * md.action_at(x, y) *
                             RatMatrix::kronecker(RatMatrix::identity(a.carrier->dims[x]),
                                                  q.sections[y]);
            if (desc * RatMatrix::kronecker(RatMatrix::identity(a.carrier->dims[x]),
                                            q.proj.comp[y]) !=
                q.proj.comp[s] * md.action_at(x, y))
                throw ComparisonNotIso("cokernel action not well defined");
            out.mod.action[{x, y}] = std::move(desc);
        }
    validate_module(a, out.mod);
    return out;
}

ReesModuleData rees_module(const LambdaRing& a, const LambdaModule& m) {
    if (!is_filtered(*a.carrier))
        throw NotFiltered("Rees module structure needs a filtered ring");
    size_t nb = a.mon.bound();
    const FctPtr& ac = a.carrier;

    // Canonical degree pieces of the ring: the chosen complement of each
    // transition image, degree 0 being all of A(0).
    std::vector<RatMatrix> piece(nb + 1);
    piece[0] = RatMatrix::identity(ac->dims[0]);
    for (size_t d = 1; d <= nb; ++d)
        piece[d] = cokernel_presentation(ac->map(d - 1, d)).section;
    // decomp[l] splits A(l) into those pieces pushed up to level l.
    std::vector<RatMatrix> decomp(nb + 1);
    std::vector<std::vector<size_t>> piece_off(nb + 1);
    for (size_t l = 0; l <= nb; ++l) {
        RatMatrix basis(ac->dims[l], 0);
        for (size_t d = 0; d <= l; ++d) {
            piece_off[l].push_back(basis.cols());
            basis = RatMatrix::hstack(basis, ac->map(d, l) * piece[d]);
        }
        decomp[l] = inverse(basis);
    }

    ReesModuleData out;
    out.r = rees(m.carrier);
    out.mod.carrier = out.r.rees;
    for (size_t x = 0; x <= nb; ++x)
        for (size_t y = 0; y <= nb; ++y) {
            size_t s = a.mon.add(x, y);
            RatMatrix nu(out.r.rees->dims[s], ac->dims[x] * out.r.rees->dims[y]);
            for (size_t d = 0; d <= x; ++d) {
                // A(x) -> A(d) landing on the degree-d component.
                RatMatrix comp_d(piece[d].cols(), ac->dims[x]);
                for (size_t r = 0; r < comp_d.rows(); ++r)
                    for (size_t c = 0; c < comp_d.cols(); ++c)
                        comp_d.at(r, c) = decomp[x].at(piece_off[x][d] + r, c);
                RatMatrix to_ad = piece[d] * comp_d;
                for (size_t p = 0; p < out.r.summand_index[y].size(); ++p) {
                    size_t mu = out.r.summand_index[y][p];
                    RatMatrix pr(m.carrier->dims[mu], out.r.rees->dims[y]);
                    pr.paste(RatMatrix::identity(m.carrier->dims[mu]), 0,
                             out.r.summand_offset[y][p]);
                    RatMatrix term = out.r.sigma(a.mon.add(d, mu), s) * m.action_at(d, mu) *
                                     RatMatrix::kronecker(to_ad, pr);
                    nu = nu + term;
                }
            }
            out.mod.action[{x, y}] = std::move(nu);
        }
    try {
        validate_module(a, out.mod);
    } catch (const AxiomFailure& e) {
        throw AxiomFailure(
            std::string("Rees action needs the ring's degree splitting to be multiplicative: ") +
            e.what());
    }
    check_linear(a, out.mod, m, out.r.epsilon);
    return out;
}

KappaModuleData kappa_module(const LambdaRing& a, const LambdaModule& m) {
    if (!is_filtered(*a.carrier)) throw NotFiltered("kappa_module needs a filtered ring");
    KappaModuleData out;
    out.k = kappa_obj(m.carrier);
    out.mod.carrier = out.k.obj;
    size_t nb = a.mon.bound();
    for (size_t x = 0; x <= nb; ++x)
        for (size_t y = 0; y <= nb; ++y) {
            size_t s = a.mon.add(x, y);
            RatMatrix idx = RatMatrix::identity(a.carrier->dims[x]);
            RatMatrix desc = out.k.unit.comp[s] * m.action_at(x, y) *
                             RatMatrix::kronecker(idx, right_inverse(out.k.unit.comp[y]));
            if (desc * RatMatrix::kronecker(idx, out.k.unit.comp[y]) !=
                out.k.unit.comp[s] * m.action_at(x, y))
                throw ComparisonNotIso("kappa action not well defined");
            out.mod.action[{x, y}] = std::move(desc);
        }
    validate_module(a, out.mod);
    return out;
}

std::vector<FctMor> hom_space_linear(const LambdaRing& a, const LambdaModule& ms,
                                     const LambdaModule& md) {
    const FctPtr& m = ms.carrier;
    const FctPtr& n = md.carrier;
    size_t ne = m->n();
    std::vector<size_t> offset(ne);
    size_t unknowns = 0;
    for (size_t i = 0; i < ne; ++i) {
        offset[i] = unknowns;
        unknowns += n->dims[i] * m->dims[i];
    }
    std::vector<std::vector<Rat>> rows;
    auto add_zero_rows = [&](size_t k) {
        rows.resize(rows.size() + k, std::vector<Rat>(unknowns));
    };
    // Naturality along the chain covers.
    for (auto& [p, q] : m->poset->covers()) {
        const RatMatrix& nm = n->map(p, q);
        const RatMatrix& mm = m->map(p, q);
        size_t base = rows.size();
        add_zero_rows(n->dims[q] * m->dims[p]);
        for (size_t r = 0; r < n->dims[q]; ++r)
            for (size_t c = 0; c < m->dims[p]; ++c) {
                auto& row = rows[base + r * m->dims[p] + c];
                for (size_t k = 0; k < n->dims[p]; ++k)
                    row[offset[p] + k * m->dims[p] + c] += nm.at(r, k);
                for (size_t k = 0; k < m->dims[q]; ++k)
                    row[offset[q] + r * m->dims[q] + k] -= mm.at(k, c);
            }
    }
    // Linearity: action_d(x, y) (id (x) f(y)) = f(add) action_s(x, y).
    size_t nb = a.mon.bound();
    for (size_t x = 0; x <= nb; ++x)
        for (size_t y = 0; y <= nb; ++y) {
            size_t s = a.mon.add(x, y);
            const RatMatrix& av = md.action_at(x, y);
            const RatMatrix& au = ms.action_at(x, y);
            size_t da = a.carrier->dims[x];
            size_t base = rows.size();
            add_zero_rows(n->dims[s] * da * m->dims[y]);
            for (size_t r = 0; r < n->dims[s]; ++r)
                for (size_t e = 0; e < da; ++e)
                    for (size_t c = 0; c < m->dims[y]; ++c) {
                        auto& row = rows[base + (r * da + e) * m->dims[y] + c];
                        // av's column block for ring coordinate e pairs with f(y).
                        for (size_t k = 0; k < n->dims[y]; ++k)
                            row[offset[y] + k * m->dims[y] + c] +=
                                av.at(r, e * n->dims[y] + k);
                        for (size_t k = 0; k < m->dims[s]; ++k)
                            row[offset[s] + r * m->dims[s] + k] -=
                                au.at(k, e * m->dims[y] + c);
                    }
        }
    RatMatrix sys(rows.size(), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < unknowns; ++c) sys.at(r, c) = rows[r][c];
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

}  // namespace filtcat
