#include "filtcat/generate.hpp"

#include <algorithm>
#include <numeric>

#include "filtcat/error.hpp"
#include "filtcat/linalg.hpp"

namespace filtcat {

size_t Rng::below(size_t n) {
    if (n == 0) return 0;
    return static_cast<size_t>(eng_() % n);
}

long Rng::int_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<size_t>(hi - lo + 1)));
}

bool Rng::chance(size_t num, size_t den) { return below(den) < num; }

Rat Rng::scalar() { return rat_of(int_in(-2, 2)); }

PosetPtr gen_poset(Rng& rng, size_t max_elems) {
    size_t n = 1 + rng.below(max_elems);
    std::vector<std::string> elems;
    for (size_t i = 0; i < n; ++i) elems.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> rel;
    if (n > 1 && rng.chance(1, 3)) {
        for (size_t i = 0; i + 1 < n; ++i) rel.emplace_back(elems[i], elems[i + 1]);
    } else {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j + 1 < n; ++j)
                if (rng.chance(2, 5)) rel.emplace_back(elems[i], elems[j]);
        // index order keeps the relation acyclic; a forced top keeps it directed
        for (size_t i = 0; i + 1 < n; ++i) rel.emplace_back(elems[i], elems[n - 1]);
    }
    return IndexPoset::make(std::move(elems), rel);
}

namespace {

// Random product of elementary integer row operations.
RatMatrix unimodular(Rng& rng, size_t n) {
    RatMatrix u = RatMatrix::identity(n);
    if (n < 2) return u;
    size_t ops = 1 + rng.below(3);
    for (size_t o = 0; o < ops; ++o) {
        size_t r1 = rng.below(n), r2 = rng.below(n);
        if (r1 == r2) continue;
        switch (rng.below(3)) {
            case 0: {
                Rat c = rat_of(rng.int_in(-2, 2));
                for (size_t j = 0; j < n; ++j) u.at(r1, j) += c * u.at(r2, j);
                break;
            }
            case 1:
                for (size_t j = 0; j < n; ++j) std::swap(u.at(r1, j), u.at(r2, j));
                break;
            default:
                for (size_t j = 0; j < n; ++j) u.at(r1, j) = -u.at(r1, j);
        }
    }
    return u;
}

std::vector<char> random_up_set(Rng& rng, const IndexPoset& p) {
    std::vector<char> in(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i)
        if (rng.chance(1, 3))
            for (size_t j = 0; j < p.size(); ++j)
                if (p.leq(i, j)) in[j] = 1;
    return in;
}

std::vector<char> random_down_set(Rng& rng, const IndexPoset& p) {
    std::vector<char> in(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i)
        if (rng.chance(1, 2))
            for (size_t j = 0; j < p.size(); ++j)
                if (p.leq(j, i)) in[j] = 1;
    return in;
}

// Assembles the direct sum of indicator summands, then conjugates by a
// random basis change at every element. Summand s contributes coordinate
// rank-of-s among the summands alive at each element it belongs to.
FctPtr assemble_summands(Rng& rng, const PosetPtr& p, const std::vector<std::vector<char>>& summands) {
    size_t n = p->size();
    std::vector<size_t> dims(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (const auto& s : summands) dims[i] += s[i];
    auto pos = [&](size_t elem, size_t sidx) {
        size_t r = 0;
        for (size_t s = 0; s < sidx; ++s) r += summands[s][elem];
        return r;
    };
    std::vector<RatMatrix> change, change_inv;
    for (size_t i = 0; i < n; ++i) {
        change.push_back(unimodular(rng, dims[i]));
        change_inv.push_back(inverse(change.back()));
    }
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (auto& [a, b] : p->covers()) {
        RatMatrix t(dims[b], dims[a]);
        for (size_t s = 0; s < summands.size(); ++s)
            if (summands[s][a] && summands[s][b]) t.at(pos(b, s), pos(a, s)) = rat_of(1);
        maps[{a, b}] = change[b] * t * change_inv[a];
    }
    return std::make_shared<FctObj>(FctObj::make(p, std::move(dims), maps));
}

}  // namespace

FctPtr gen_functor(Rng& rng, const PosetPtr& p, size_t max_dim) {
    size_t k = 1 + rng.below(std::max<size_t>(max_dim, 1));
    std::vector<std::vector<char>> summands;
    for (size_t s = 0; s < k; ++s) {
        // intersection of an up-set and a down-set is order-convex
        std::vector<char> up = random_up_set(rng, *p), down = random_down_set(rng, *p);
        std::vector<char> in(p->size());
        for (size_t i = 0; i < p->size(); ++i) in[i] = up[i] && down[i];
        summands.push_back(std::move(in));
    }
    return assemble_summands(rng, p, summands);
}

FctPtr gen_filtered(Rng& rng, const PosetPtr& p, size_t max_dim) {
    size_t k = 1 + rng.below(std::max<size_t>(max_dim, 1));
    std::vector<std::vector<char>> summands;
    for (size_t s = 0; s < k; ++s) summands.push_back(random_up_set(rng, *p));
    return assemble_summands(rng, p, summands);
}

FctPtr gen_stable(Rng& rng, const PosetPtr& chain, size_t max_dim, size_t stable_from) {
    if (!chain->is_chain()) throw ValidationError("gen_stable expects a chain");
    size_t n = chain->size();
    size_t k = 1 + rng.below(std::max<size_t>(max_dim, 1));
    std::vector<std::vector<char>> summands;
    for (size_t s = 0; s < k; ++s) {
        std::vector<char> in(n, 0);
        if (stable_from == 0 || rng.chance(1, 2)) {
            size_t a = rng.below(stable_from + 1);
            for (size_t i = a; i < n; ++i) in[i] = 1;
        } else {
            size_t a = rng.below(stable_from);
            size_t b = a + rng.below(stable_from - a);  // b <= stable_from - 1
            for (size_t i = a; i <= b; ++i) in[i] = 1;
        }
        summands.push_back(std::move(in));
    }
    return assemble_summands(rng, chain, summands);
}

FctMor gen_morphism(Rng& rng, const FctPtr& src, const FctPtr& dst) {
    std::vector<FctMor> basis = hom_space(src, dst);
    if (basis.empty()) return zero_mor(src, dst);
    std::vector<Rat> coeffs;
    for (size_t i = 0; i < basis.size(); ++i) coeffs.push_back(rng.scalar());
    return mor_combination(basis, coeffs, src, dst);
}

Complex gen_complex(Rng& rng, const PosetPtr& p, size_t max_dim, size_t max_terms,
                    bool filtered) {
    size_t nt = 1 + rng.below(std::max<size_t>(max_terms, 1));
    long lo = rng.int_in(-1, 1);
    std::vector<FctPtr> terms;
    for (size_t i = 0; i < nt; ++i)
        terms.push_back(filtered ? gen_filtered(rng, p, max_dim) : gen_functor(rng, p, max_dim));
    std::vector<FctMor> diffs;
    for (size_t i = 0; i + 1 < nt; ++i) {
        if (i == 0) {
            diffs.push_back(gen_morphism(rng, terms[0], terms[1]));
            continue;
        }
        // sample from the kernel of (o diffs[i-1]) on the hom space
        std::vector<FctMor> basis = hom_space(terms[i], terms[i + 1]);
        if (basis.empty()) {
            diffs.push_back(zero_mor(terms[i], terms[i + 1]));
            continue;
        }
        size_t rows = 0;
        for (size_t e = 0; e < p->size(); ++e)
            rows += terms[i + 1]->dims[e] * terms[i - 1]->dims[e];
        RatMatrix sys(rows, basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            FctMor comp = compose(basis[j], diffs[i - 1]);
            size_t r = 0;
            for (size_t e = 0; e < p->size(); ++e)
                for (size_t rr = 0; rr < comp.comp[e].rows(); ++rr)
                    for (size_t cc = 0; cc < comp.comp[e].cols(); ++cc)
                        sys.at(r++, j) = comp.comp[e].at(rr, cc);
        }
        RatMatrix kb = kernel_basis(sys);
        std::vector<Rat> coeffs(basis.size(), rat_of(0));
        for (size_t c = 0; c < kb.cols(); ++c) {
            Rat t = rng.scalar();
            for (size_t r = 0; r < kb.rows(); ++r) coeffs[r] += t * kb.at(r, c);
        }
        diffs.push_back(mor_combination(basis, coeffs, terms[i], terms[i + 1]));
    }
    return Complex::make(p, lo, std::move(terms), std::move(diffs));
}

namespace {

// Monomials as exponent vectors, enumerated by weighted degree then
// lexicographically; the carrier at l is the prefix of weight <= l.
struct MonomialBasis {
    std::vector<std::vector<size_t>> expo;
    std::vector<size_t> weight;
    std::vector<size_t> dims;  // dims[l] = #monomials of weight <= l

    size_t find(const std::vector<size_t>& e) const {
        for (size_t i = 0; i < expo.size(); ++i)
            if (expo[i] == e) return i;
        throw Error("monomial lookup failed");
    }
};

MonomialBasis enumerate_monomials(const std::vector<size_t>& degs, size_t bound) {
    MonomialBasis mb;
    std::vector<size_t> cur(degs.size(), 0);
    std::function<void(size_t, size_t)> rec = [&](size_t var, size_t used) {
        if (var == degs.size()) {
            mb.expo.push_back(cur);
            mb.weight.push_back(used);
            return;
        }
        for (size_t e = 0; used + e * degs[var] <= bound; ++e) {
            cur[var] = e;
            rec(var + 1, used + e * degs[var]);
        }
        cur[var] = 0;
    };
    rec(0, 0);
    std::vector<size_t> order(mb.expo.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (mb.weight[a] != mb.weight[b]) return mb.weight[a] < mb.weight[b];
        return mb.expo[a] < mb.expo[b];
    });
    MonomialBasis out;
    for (size_t i : order) {
        out.expo.push_back(mb.expo[i]);
        out.weight.push_back(mb.weight[i]);
    }
    out.dims.assign(bound + 1, 0);
    for (size_t l = 0; l <= bound; ++l)
        for (size_t w : out.weight) out.dims[l] += (w <= l);
    return out;
}

}  // namespace

LambdaRing monomial_ring(const IndexMonoid& mon, const std::vector<size_t>& gen_degrees) {
    for (size_t d : gen_degrees)
        if (d == 0) throw ValidationError("monomial generators need positive degree");
    size_t nb = mon.bound();
    MonomialBasis mb = enumerate_monomials(gen_degrees, nb);
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (size_t l = 1; l <= nb; ++l) {
        RatMatrix inc(mb.dims[l], mb.dims[l - 1]);
        for (size_t c = 0; c < mb.dims[l - 1]; ++c) inc.at(c, c) = rat_of(1);
        maps[{l - 1, l}] = std::move(inc);
    }
    LambdaRing a{mon,
                 std::make_shared<FctObj>(FctObj::make(
                     mon.base(), std::vector<size_t>(mb.dims.begin(), mb.dims.end()), maps)),
                 {},
                 true,
                 RatMatrix(mb.dims[0], 1)};
    a.unit.at(0, 0) = rat_of(1);
    for (size_t x = 0; x <= nb; ++x)
        for (size_t y = 0; y <= nb; ++y) {
            size_t s = mon.add(x, y);
            RatMatrix m(mb.dims[s], mb.dims[x] * mb.dims[y]);
            for (size_t i = 0; i < mb.dims[x]; ++i)
                for (size_t j = 0; j < mb.dims[y]; ++j) {
                    std::vector<size_t> e(gen_degrees.size());
                    for (size_t v = 0; v < e.size(); ++v)
                        e[v] = mb.expo[i][v] + mb.expo[j][v];
                    if (mb.weight[i] + mb.weight[j] > s) continue;  // overflow is zero
                    m.at(mb.find(e), i * mb.dims[y] + j) = rat_of(1);
                }
            a.mult[{x, y}] = std::move(m);
        }
    validate_ring(a);
    return a;
}

LambdaRing truncated_polynomial_ring(const IndexMonoid& mon) { return monomial_ring(mon, {1}); }

LambdaRing gen_ring(Rng& rng, const IndexMonoid& mon) {
    switch (rng.below(4)) {
        case 0: return unit_object(mon);
        case 1: return monomial_ring(mon, {1, 2});
        default: return truncated_polynomial_ring(mon);
    }
}

LambdaModule free_module(const LambdaRing& a, size_t mu, size_t v) {
    size_t nb = a.mon.bound();
    if (mu > nb) throw ValidationError("free module shift is outside the window");
    const FctPtr& ac = a.carrier;
    // level of the ring fibre at l
    auto delta = [&](size_t l) { return l == nb ? nb : l - mu; };
    std::vector<size_t> dims(nb + 1, 0);
    for (size_t l = 0; l <= nb; ++l)
        if (l >= mu) dims[l] = ac->dims[delta(l)] * v;
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    for (size_t l = 1; l <= nb; ++l) {
        if (l < mu) {
            maps[{l - 1, l}] = RatMatrix(dims[l], dims[l - 1]);
        } else if (l == mu) {
            maps[{l - 1, l}] = RatMatrix(dims[l], 0);
        } else {
            maps[{l - 1, l}] =
                RatMatrix::kronecker(ac->map(delta(l - 1), delta(l)), RatMatrix::identity(v));
        }
    }
    LambdaModule m{std::make_shared<FctObj>(FctObj::make(a.mon.base(), dims, maps)), {}};
    for (size_t x = 0; x <= nb; ++x)
        for (size_t y = 0; y <= nb; ++y) {
            size_t s = a.mon.add(x, y);
            if (y < mu) {
                m.action[{x, y}] = RatMatrix(dims[s], ac->dims[x] * dims[y]);
                continue;
            }
            size_t md = a.mon.add(x, delta(y));
            RatMatrix step = ac->map(md, delta(s)) * a.mult_at(x, delta(y));
            m.action[{x, y}] = RatMatrix::kronecker(step, RatMatrix::identity(v));
        }
    validate_module(a, m);
    return m;
}

FctMor gen_linear_morphism(Rng& rng, const LambdaRing& a, const LambdaModule& ms,
                           const LambdaModule& md) {
    std::vector<FctMor> basis = hom_space_linear(a, ms, md);
    if (basis.empty()) return zero_mor(ms.carrier, md.carrier);
    std::vector<Rat> coeffs;
    for (size_t i = 0; i < basis.size(); ++i) coeffs.push_back(rng.scalar());
    return mor_combination(basis, coeffs, ms.carrier, md.carrier);
}

LambdaModule gen_module(Rng& rng, const LambdaRing& a, size_t max_dim) {
    size_t nb = a.mon.bound();
    size_t mu = rng.below(nb + 1);
    size_t v = 1 + rng.below(std::max<size_t>(max_dim, 1));
    switch (rng.below(3)) {
        case 0: return free_module(a, mu, v);
        case 1: {
            LambdaModule f1 = free_module(a, mu, v);
            LambdaModule f2 = free_module(a, rng.below(nb + 1), 1 + rng.below(2));
            return module_kernel(a, f1, f2, gen_linear_morphism(rng, a, f1, f2)).mod;
        }
        default: {
            LambdaModule f1 = free_module(a, mu, 1 + rng.below(2));
            LambdaModule f2 = free_module(a, rng.below(nb + 1), v);
            return module_cokernel(a, f1, f2, gen_linear_morphism(rng, a, f1, f2)).mod;
        }
    }
}

Instance coim_vs_im_instance() {
    Instance ins;
    std::vector<std::string> elems = {"0", "1", "2", "3", "4"};
    std::vector<std::pair<std::string, std::string>> rel;
    for (size_t i = 0; i + 1 < elems.size(); ++i) rel.emplace_back(elems[i], elems[i + 1]);
    ins.poset = IndexPoset::make(elems, rel);

    // M'(n) = polynomials of degree <= n, M(n) = degree <= n+1 capped at the
    // top level so that f(top) is an isomorphism.
    auto inclusion = [&](const std::vector<size_t>& dims) {
        std::map<std::pair<size_t, size_t>, RatMatrix> maps;
        for (size_t l = 1; l < dims.size(); ++l) {
            RatMatrix inc(dims[l], dims[l - 1]);
            for (size_t c = 0; c < dims[l - 1]; ++c) inc.at(c, c) = rat_of(1);
            maps[{l - 1, l}] = std::move(inc);
        }
        return std::make_shared<FctObj>(FctObj::make(ins.poset, dims, maps));
    };
    FctPtr mp = inclusion({1, 2, 3, 4, 5});
    FctPtr m = inclusion({2, 3, 4, 5, 5});
    ins.functors["Mp"] = mp;
    ins.functors["M"] = m;
    FctMor f{mp, m, {}};
    for (size_t l = 0; l < 5; ++l) {
        RatMatrix c(m->dims[l], mp->dims[l]);
        for (size_t i = 0; i < mp->dims[l]; ++i) c.at(i, i) = rat_of(1);
        f.comp.push_back(std::move(c));
    }
    f.validate();
    ins.morphisms["f"] = std::move(f);
    return ins;
}

}  // namespace filtcat
