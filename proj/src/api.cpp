#include "filtcat/api.hpp"

#include <json.hpp>
#include <sstream>

#include "filtcat/complex.hpp"
#include "filtcat/error.hpp"
#include "filtcat/filtered.hpp"
#include "filtcat/generate.hpp"
#include "filtcat/instance.hpp"
#include "filtcat/linalg.hpp"
#include "filtcat/rees.hpp"
#include "filtcat/tensor.hpp"
#include "filtcat/verify.hpp"

namespace filtcat {

namespace {

using ojson = nlohmann::ordered_json;

std::string csv(const std::vector<size_t>& dims) {
    std::string s;
    for (size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    return s;
}

ojson dims_by_level(const PosetPtr& p, const std::vector<size_t>& dims) {
    ojson o = ojson::object();
    for (size_t i = 0; i < dims.size(); ++i) o[p->name(i)] = dims[i];
    return o;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Effective positional list: --name acts as the first positional.
std::vector<std::string> positionals(const CommandRequest& req) {
    std::vector<std::string> v;
    if (!req.name.empty()) v.push_back(req.name);
    v.insert(v.end(), req.args.begin(), req.args.end());
    return v;
}

const std::string& positional(const CommandRequest& req, const std::vector<std::string>& pos,
                              size_t i, const char* what) {
    if (i >= pos.size())
        throw ValidationError("command '" + req.command + "' needs a " + std::string(what));
    return pos[i];
}

long int_positional(const CommandRequest& req, const std::vector<std::string>& pos, size_t i,
                    const char* what) {
    const std::string& s = positional(req, pos, i, what);
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("command '" + req.command + "': '" + s + "' is not an integer " +
                              std::string(what));
    }
}

Instance need_instance(const CommandRequest& req) {
    if (req.in_path.empty())
        throw ValidationError("command '" + req.command + "' requires --in <instance file>");
    return load_instance(req.in_path);
}

bool mono_pointwise(const FctMor& f) {
    for (size_t i = 0; i < f.src->n(); ++i)
        if (rank(f.comp[i]) != f.src->dims[i]) return false;
    return true;
}

bool epi_top(const FctMor& f) {
    size_t top = f.src->poset->top();
    return rank(f.comp[top]) == f.dst->dims[top];
}

struct Report {
    std::ostringstream text;
    ojson js = ojson::object();
    bool ok = true;

    CommandResult finish() {
        js["ok"] = ok;
        CommandResult r;
        r.ok = ok;
        r.text = text.str();
        r.json_text = js.dump(2) + "\n";
        return r;
    }
};

CommandResult cmd_check(const CommandRequest& req) {
    Instance ins = need_instance(req);
    Report r;
    r.js["command"] = "check";
    if (ins.mon) {
        r.text << "monoid bound: " << ins.mon->bound() << "\n";
        r.js["monoid_bound"] = ins.mon->bound();
    }
    r.text << "poset: " << ins.poset->size() << " elements\n";
    r.js["poset_elements"] = ins.poset->size();
    auto count = [&](const char* label, size_t n) {
        r.text << label << ": " << n << "\n";
        r.js[label] = n;
    };
    count("functors", ins.functors.size());
    count("morphisms", ins.morphisms.size());
    count("complexes", ins.complexes.size());
    count("rings", ins.rings.size());
    count("modules", ins.modules.size());
    r.text << "all objects validated\n";
    return r.finish();
}

CommandResult cmd_kappa(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& name = positional(req, pos, 0, "functor name");
    const FctPtr& m = ins.functor(name);
    KappaData k = kappa_obj(m);
    Report r;
    r.js["command"] = "kappa";
    r.js["name"] = name;
    r.text << "kappa " << name << ": dims " << csv(k.obj->dims) << "\n";
    bool filt = k.unit.is_iso();
    r.text << "unit is iso (input already filtered): " << yesno(filt) << "\n";
    r.js["dims"] = dims_by_level(ins.poset, k.obj->dims);
    r.js["unit_iso"] = filt;
    return r.finish();
}

CommandResult cmd_rees(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& name = positional(req, pos, 0, "functor name");
    ReesStructure rs = rees(ins.functor(name));
    Report r;
    r.js["command"] = "rees";
    r.js["name"] = name;
    r.text << "rees " << name << ": dims " << csv(rs.rees->dims) << "\n";
    r.js["dims"] = dims_by_level(ins.poset, rs.rees->dims);
    return r.finish();
}

CommandResult cmd_resolution(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& name = positional(req, pos, 0, "functor name");
    const FctPtr& m = ins.functor(name);
    ReesResolution rr = rees_resolution(m);
    Report r;
    r.js["command"] = "resolution";
    r.js["name"] = name;
    r.text << "kernel: dims " << csv(rr.k.obj->dims) << "\n";
    r.text << "rees:   dims " << csv(rr.r.rees->dims) << "\n";
    r.text << "object: dims " << csv(m->dims) << "\n";
    ExactnessReport ex = strictly_exact_pair(rr.k.incl, rr.r.epsilon);
    r.text << "strictly exact: " << yesno(ex.ok) << "\n";
    r.js["kernel_dims"] = dims_by_level(ins.poset, rr.k.obj->dims);
    r.js["rees_dims"] = dims_by_level(ins.poset, rr.r.rees->dims);
    r.js["object_dims"] = dims_by_level(ins.poset, m->dims);
    r.js["strictly_exact"] = ex.ok;
    r.ok = ex.ok;
    return r.finish();
}

CommandResult cmd_transpose(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& name = positional(req, pos, 0, "morphism name");
    const FctMor& f = ins.morphism(name);
    KappaData k = kappa_obj(f.src);
    FctMor g = adjoint_transpose(k, f);
    bool match = mor_equal(adjoint_transpose_inv(k, g), f);
    Report r;
    r.js["command"] = "transpose";
    r.js["name"] = name;
    r.text << "transpose " << name << ": dims " << csv(g.src->dims) << " -> "
           << csv(g.dst->dims) << "\n";
    r.text << "round trip matches: " << yesno(match) << "\n";
    r.js["src_dims"] = dims_by_level(ins.poset, g.src->dims);
    r.js["dst_dims"] = dims_by_level(ins.poset, g.dst->dims);
    r.js["round_trip"] = match;
    r.ok = match;
    return r.finish();
}

CommandResult cmd_op(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    if (req.kind.empty())
        throw ValidationError("command 'op' requires --kind ker|coker|im|coim");
    const std::string& name = positional(req, pos, 0, "morphism name");
    const FctMor& f = ins.morphism(name);
    FiltOpResult res = filt_op(filt_op_kind(req.kind), f);
    Report r;
    r.js["command"] = "op";
    r.js["kind"] = req.kind;
    r.js["name"] = name;
    r.text << req.kind << " " << name << "\n";
    r.text << "dims " << csv(res.obj->dims) << "\n";
    r.js["dims"] = dims_by_level(ins.poset, res.obj->dims);
    return r.finish();
}

CommandResult cmd_strict(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& name = positional(req, pos, 0, "morphism name");
    const FctMor& f = ins.morphism(name);
    StrictnessReport s = strictness(f);
    Report r;
    r.js["command"] = "strict";
    r.js["name"] = name;
    r.text << "strict: " << yesno(s.is_strict) << "\n";
    r.text << "coim -> im is iso: " << yesno(s.coim_to_im.is_iso()) << "\n";
    r.text << "mono: " << yesno(mono_pointwise(f)) << "\n";
    r.text << "epi: " << yesno(epi_top(f)) << "\n";
    r.js["strict"] = s.is_strict;
    r.js["mono"] = mono_pointwise(f);
    r.js["epi"] = epi_top(f);
    r.ok = s.is_strict;
    return r.finish();
}

void complex_lines(Report& r, const PosetPtr& p, const Complex& x) {
    ojson terms = ojson::object();
    for (long n = x.lo; n <= x.hi(); ++n) {
        r.text << "degree " << n << ": dims " << csv(x.term(n)->dims) << "\n";
        terms[std::to_string(n)] = dims_by_level(p, x.term(n)->dims);
    }
    if (x.lo > x.hi()) r.text << "zero complex\n";
    r.js["terms"] = terms;
}

CommandResult cmd_truncate(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& name = positional(req, pos, 0, "complex name");
    long n = int_positional(req, pos, 1, "degree");
    std::string kind = req.kind.empty() ? "le" : req.kind;
    Cat cat;
    if (req.cat == "fct")
        cat = Cat::Fct;
    else if (req.cat == "filt")
        cat = Cat::Filt;
    else
        throw ValidationError("--cat must be fct or filt");
    const Complex& x = ins.complex(name);
    Complex out = Complex::zero(ins.poset);
    if (kind == "le")
        out = truncate_le(x, n);
    else if (kind == "ge")
        out = truncate_ge(x, n, cat);
    else
        throw ValidationError("command 'truncate' requires --kind le|ge");
    Report r;
    r.js["command"] = "truncate";
    r.js["kind"] = kind;
    r.js["name"] = name;
    r.js["degree"] = n;
    r.text << "truncate " << kind << " " << n << " of " << name << "\n";
    complex_lines(r, ins.poset, out);
    return r.finish();
}

CommandResult cmd_cone(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& name = positional(req, pos, 0, "morphism name");
    const FctMor& f = ins.morphism(name);
    Complex cs = Complex::single(f.src, 0);
    Complex cd = Complex::single(f.dst, 0);
    ComplexMor cf = ComplexMor::make(cs, cd, 0, {f});
    ConeData c = mapping_cone(cf);
    Report r;
    r.js["command"] = "cone";
    r.js["name"] = name;
    r.text << "cone of " << name << " (as a map of one-term complexes)\n";
    complex_lines(r, ins.poset, c.cone);
    ojson h = ojson::object();
    for (long n = c.cone.lo; n <= c.cone.hi(); ++n) {
        CohomologyData hn = cohomology(c.cone, n);
        r.text << "H^" << n << ": dims " << csv(hn.obj->dims) << "\n";
        h[std::to_string(n)] = dims_by_level(ins.poset, hn.obj->dims);
    }
    r.js["cohomology"] = h;
    return r.finish();
}

CommandResult cmd_cohomology(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& name = positional(req, pos, 0, "complex name");
    long n = int_positional(req, pos, 1, "degree");
    CohomologyData h = cohomology(ins.complex(name), n);
    Report r;
    r.js["command"] = "cohomology";
    r.js["name"] = name;
    r.js["degree"] = n;
    r.text << "H^" << n << "(" << name << "): dims " << csv(h.obj->dims) << "\n";
    r.js["dims"] = dims_by_level(ins.poset, h.obj->dims);
    return r.finish();
}

CommandResult cmd_lkappa(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& name = positional(req, pos, 0, "complex name");
    LkappaData l = lkappa(ins.complex(name));
    bool q = qis_check(l.augmentation);
    Report r;
    r.js["command"] = "lkappa";
    r.js["name"] = name;
    r.text << "resolution of " << name << ", degrees [" << l.total.lo << ", " << l.total.hi()
           << "]\n";
    complex_lines(r, ins.poset, l.total);
    r.text << "augmentation is a quasi-isomorphism: " << yesno(q) << "\n";
    r.js["augmentation_qis"] = q;
    r.ok = q;
    return r.finish();
}

CommandResult cmd_tensor(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& n1 = positional(req, pos, 0, "functor name");
    const std::string& n2 = positional(req, pos, 1, "second functor name");
    const IndexMonoid& mon = ins.monoid();
    const FctPtr& m1 = ins.functor(n1);
    const FctPtr& m2 = ins.functor(n2);
    TensorStructure ts = tensor_fct(mon, m1, m2);
    Report r;
    r.js["command"] = "tensor";
    r.js["names"] = ojson::array({n1, n2});
    r.text << "tensor " << n1 << " " << n2 << ": dims " << csv(ts.obj->dims) << "\n";
    r.js["dims"] = dims_by_level(ins.poset, ts.obj->dims);
    if (is_filtered(*m1) && is_filtered(*m2)) {
        TensorFiltData tf = tensor_filt(mon, m1, m2);
        r.text << "filtered reflection: dims " << csv(tf.obj->dims) << "\n";
        r.js["filtered_dims"] = dims_by_level(ins.poset, tf.obj->dims);
    }
    return r.finish();
}

CommandResult cmd_ring_check(const CommandRequest& req) {
    Instance ins = need_instance(req);
    auto pos = positionals(req);
    const std::string& name = positional(req, pos, 0, "ring name");
    const LambdaRing& a = ins.ring(name);
    validate_ring(a);
    Report r;
    r.js["command"] = "ring-check";
    r.js["name"] = name;
    r.text << "ring " << name << ": associativity and unit laws hold\n";
    ojson mods = ojson::array();
    for (auto& [mname, m] : ins.modules) {
        if (ins.module_ring.at(mname) != name) continue;
        validate_module(a, m);
        r.text << "module " << mname << " over " << name << ": action laws hold\n";
        mods.push_back(mname);
    }
    r.js["modules"] = mods;
    return r.finish();
}

CommandResult cmd_demo(const CommandRequest& req) {
    auto pos = positionals(req);
    const std::string& which = positional(req, pos, 0, "demo name");
    if (which != "coim-vs-im")
        throw ValidationError("unknown demo '" + which + "' (available: coim-vs-im)");
    Instance ins = coim_vs_im_instance();
    const FctMor& f = ins.morphism("f");
    FiltOpResult im = filt_op(FiltOpKind::Im, f);
    FiltOpResult coim = filt_op(FiltOpKind::Coim, f);
    StrictnessReport s = strictness(f);
    bool mono = mono_pointwise(f), epi = epi_top(f);
    FctMor cmp = s.coim_to_im;
    bool cmp_mono = mono_pointwise(cmp);
    bool cmp_coker_zero = filt_op(FiltOpKind::Coker, cmp).obj->total_dim() == 0;

    Report r;
    r.js["command"] = "demo";
    r.js["name"] = "coim-vs-im";
    const PosetPtr& p = ins.poset;
    ojson tables = ojson::object();
    r.text << "level ";
    for (size_t i = 0; i < p->size(); ++i) r.text << " " << p->name(i);
    r.text << "\n";
    auto row = [&](const std::string& label, const std::vector<size_t>& dims) {
        r.text << label;
        for (size_t i = label.size(); i < 6; ++i) r.text << " ";
        for (size_t d : dims) r.text << " " << d;
        r.text << "\n";
        tables[label] = dims;
    };
    row("M'", ins.functor("Mp")->dims);
    row("M", ins.functor("M")->dims);
    row("im f", im.obj->dims);
    row("coim f", coim.obj->dims);
    r.js["tables"] = tables;
    r.text << "coim f -> im f is pointwise injective with zero filtered cokernel: "
           << yesno(cmp_mono && cmp_coker_zero) << "\n";
    bool verdict = mono && epi && !s.is_strict;
    if (verdict) r.text << "f is mono+epi but not strict\n";
    r.js["mono"] = mono;
    r.js["epi"] = epi;
    r.js["strict"] = s.is_strict;
    r.ok = verdict && cmp_mono && cmp_coker_zero;
    return r.finish();
}

CommandResult cmd_verify(const CommandRequest& req) {
    auto pos = positionals(req);
    VerifyConfig cfg;
    cfg.suite = req.suite.empty() ? positional(req, pos, 0, "suite id (or --suite)") : req.suite;
    cfg.trials = req.trials;
    cfg.seed = req.seed;
    VerifyReport rep = run_verify(cfg);
    Report r;
    r.js["command"] = "verify";
    r.js["suite"] = rep.suite;
    r.js["trials"] = rep.total;
    r.js["seed"] = req.seed;
    r.text << "suite: " << rep.suite << "\n";
    ojson fails = ojson::array();
    for (const TrialFailure& f : rep.failures) {
        r.text << "trial " << f.trial << ": " << f.message << "\n";
        fails.push_back(ojson{{"trial", f.trial}, {"message", f.message}});
    }
    r.text << rep.passed << "/" << rep.total << " passed\n";
    r.js["passed"] = rep.passed;
    r.js["failures"] = fails;
    r.ok = rep.ok();
    return r.finish();
}

CommandResult cmd_generate(const CommandRequest& req) {
    std::string kind = req.kind.empty() ? "instance" : req.kind;
    Rng rng(req.seed);
    size_t max_poset = 5, max_dim = 3, bound = 3;
    Instance ins;
    // complexes serialize by referencing named terms and diffs
    auto register_complex = [](Instance& dst, const std::string& cname, const Complex& x) {
        for (long n = x.lo; n <= x.hi(); ++n)
            dst.functors[cname + std::to_string(n)] = x.term(n);
        for (long n = x.lo; n < x.hi(); ++n)
            if (!x.diff(n).is_zero()) dst.morphisms["d" + cname + std::to_string(n)] = x.diff(n);
        dst.complexes.insert_or_assign(cname, x);
    };
    if (kind == "poset") {
        ins.poset = gen_poset(rng, max_poset);
    } else if (kind == "functor") {
        ins.poset = gen_poset(rng, max_poset);
        ins.functors["A"] = gen_functor(rng, ins.poset, max_dim);
    } else if (kind == "filtered") {
        ins.poset = gen_poset(rng, max_poset);
        ins.functors["A"] = gen_filtered(rng, ins.poset, max_dim);
        ins.functors["B"] = gen_filtered(rng, ins.poset, max_dim);
        ins.morphisms["f"] = gen_morphism(rng, ins.functors["A"], ins.functors["B"]);
    } else if (kind == "morphism" || kind == "instance") {
        ins.poset = gen_poset(rng, max_poset);
        ins.functors["A"] = gen_functor(rng, ins.poset, max_dim);
        ins.functors["B"] = gen_filtered(rng, ins.poset, max_dim);
        ins.morphisms["f"] = gen_morphism(rng, ins.functors["A"], ins.functors["B"]);
        if (kind == "instance")
            register_complex(ins, "X", gen_complex(rng, ins.poset, max_dim, 3, false));
    } else if (kind == "complex") {
        ins.poset = gen_poset(rng, max_poset);
        register_complex(ins, "X", gen_complex(rng, ins.poset, max_dim, 3, false));
    } else if (kind == "ring") {
        IndexMonoid mon(bound);
        ins.mon = mon;
        ins.poset = mon.base();
        LambdaRing a = gen_ring(rng, mon);
        ins.functors["P"] = a.carrier;
        ins.rings.insert_or_assign("A", std::move(a));
    } else if (kind == "module") {
        IndexMonoid mon(bound);
        ins.mon = mon;
        ins.poset = mon.base();
        LambdaRing a = truncated_polynomial_ring(mon);
        LambdaModule m = gen_module(rng, a, 2);
        ins.functors["P"] = a.carrier;
        ins.functors["N"] = m.carrier;
        ins.rings.insert_or_assign("A", std::move(a));
        ins.modules.insert_or_assign("M", std::move(m));
        ins.module_ring["M"] = "A";
    } else {
        throw ValidationError(
            "unknown generate kind '" + kind +
            "' (available: poset, functor, filtered, morphism, complex, ring, module, instance)");
    }
    std::string text = instance_text(ins);
    Report r;
    r.js["command"] = "generate";
    r.js["kind"] = kind;
    r.js["seed"] = req.seed;
    r.js["instance"] = ojson::parse(text);
    if (!req.out_path.empty()) {
        save_instance(ins, req.out_path);
        r.text << "saved " << req.out_path << "\n";
        r.js["saved"] = req.out_path;
    } else {
        r.text << text;
    }
    return r.finish();
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {
        "check",      "kappa", "rees",       "resolution", "transpose", "op",
        "strict",     "truncate", "cone",    "cohomology", "lkappa",    "tensor",
        "ring-check", "demo",  "verify",     "generate"};
    return names;
}

CommandResult run_command(const CommandRequest& req) {
    const std::string& c = req.command;
    if (c == "check") return cmd_check(req);
    if (c == "kappa") return cmd_kappa(req);
    if (c == "rees") return cmd_rees(req);
    if (c == "resolution") return cmd_resolution(req);
    if (c == "transpose") return cmd_transpose(req);
    if (c == "op") return cmd_op(req);
    if (c == "strict") return cmd_strict(req);
    if (c == "truncate") return cmd_truncate(req);
    if (c == "cone") return cmd_cone(req);
    if (c == "cohomology") return cmd_cohomology(req);
    if (c == "lkappa") return cmd_lkappa(req);
    if (c == "tensor") return cmd_tensor(req);
    if (c == "ring-check") return cmd_ring_check(req);
    if (c == "demo") return cmd_demo(req);
    if (c == "verify") return cmd_verify(req);
    if (c == "generate") return cmd_generate(req);
    throw UnknownCommand("unknown command '" + c + "'");
}

}  // namespace filtcat
