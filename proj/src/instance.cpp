#include "filtcat/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "filtcat/error.hpp"
#include "filtcat/rat.hpp"

namespace filtcat {

using nlohmann::json;

namespace {

Rat rat_field(const json& j) {
    if (j.is_number_integer()) return rat_of(j.get<long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw ParseError("rational entries must be integers or \"p/q\" strings");
}

// Shapes are always known from the surrounding dims, so they are enforced
// here; a 0 x c matrix serializes as [] and needs the expected shape back.
RatMatrix matrix_field(const json& j, size_t rows, size_t cols) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    if (j.size() != rows)
        throw ParseError("matrix has " + std::to_string(j.size()) + " rows, expected " +
                         std::to_string(rows));
    RatMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        const json& row = j.at(r);
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix row " + std::to_string(r) + " must be an array of length " +
                             std::to_string(cols));
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = rat_field(row.at(c));
    }
    return m;
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Transition keys look like "0<=2"; index pair keys like "1,2".
std::pair<size_t, size_t> split_key(const IndexPoset& p, const std::string& key,
                                    const std::string& sep) {
    size_t pos = key.find(sep);
    if (pos == std::string::npos)
        throw ParseError("key '" + key + "' is not of the form a" + sep + "b");
    std::string a = key.substr(0, pos), b = key.substr(pos + sep.size());
    if (!p.has(a) || !p.has(b)) throw ParseError("key '" + key + "' names unknown elements");
    return {p.index(a), p.index(b)};
}

FctPtr functor_field(const PosetPtr& p, const json& j) {
    const json& dims_j = j.at("dims");
    std::vector<size_t> dims(p->size(), 0);
    std::vector<char> seen(p->size(), 0);
    for (auto it = dims_j.begin(); it != dims_j.end(); ++it) {
        if (!p->has(it.key())) throw ParseError("dims entry for unknown element '" + it.key() + "'");
        size_t i = p->index(it.key());
        dims[i] = it.value().get<size_t>();
        seen[i] = 1;
    }
    for (size_t i = 0; i < p->size(); ++i)
        if (!seen[i]) throw ParseError("dims entry missing for element '" + p->name(i) + "'");
    std::map<std::pair<size_t, size_t>, RatMatrix> maps;
    if (j.contains("maps"))
        for (auto it = j.at("maps").begin(); it != j.at("maps").end(); ++it) {
            auto [a, b] = split_key(*p, it.key(), "<=");
            maps[{a, b}] = matrix_field(it.value(), dims[b], dims[a]);
        }
    return std::make_shared<FctObj>(FctObj::make(p, std::move(dims), maps));
}

std::vector<RatMatrix> comp_field(const json& j, const FctObj& src, const FctObj& dst) {
    const PosetPtr& p = src.poset;
    std::vector<RatMatrix> comp(p->size());
    std::vector<char> seen(p->size(), 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!p->has(it.key())) throw ParseError("component for unknown element '" + it.key() + "'");
        size_t i = p->index(it.key());
        comp[i] = matrix_field(it.value(), dst.dims[i], src.dims[i]);
        seen[i] = 1;
    }
    for (size_t i = 0; i < p->size(); ++i)
        if (!seen[i]) throw ParseError("component missing for element '" + p->name(i) + "'");
    return comp;
}

json comp_json(const IndexPoset& p, const std::vector<RatMatrix>& comp) {
    json out = json::object();
    for (size_t i = 0; i < p.size(); ++i) out[p.name(i)] = matrix_json(comp[i]);
    return out;
}

json functor_json(const FctObj& m) {
    json dims = json::object();
    for (size_t i = 0; i < m.n(); ++i) dims[m.poset->name(i)] = m.dims[i];
    json maps = json::object();
    for (auto& [a, b] : m.poset->covers())
        maps[m.poset->name(a) + "<=" + m.poset->name(b)] = matrix_json(m.map(a, b));
    return json{{"dims", std::move(dims)}, {"maps", std::move(maps)}};
}

// Names the failing object so errors read "functor 'M': ...".
template <typename F>
void named(const std::string& kind, const std::string& name, F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        throw ParseError(kind + " '" + name + "': " + e.what());
    } catch (const json::exception& e) {
        throw ParseError(kind + " '" + name + "': " + e.what());
    } catch (const Error& e) {
        throw ValidationError(kind + " '" + name + "': " + e.what());
    }
}

}  // namespace

const FctPtr& Instance::functor(const std::string& name) const {
    auto it = functors.find(name);
    if (it == functors.end()) throw ValidationError("no functor named '" + name + "'");
    return it->second;
}
const FctMor& Instance::morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) throw ValidationError("no morphism named '" + name + "'");
    return it->second;
}
const Complex& Instance::complex(const std::string& name) const {
    auto it = complexes.find(name);
    if (it == complexes.end()) throw ValidationError("no complex named '" + name + "'");
    return it->second;
}
const LambdaRing& Instance::ring(const std::string& name) const {
    auto it = rings.find(name);
    if (it == rings.end()) throw ValidationError("no ring named '" + name + "'");
    return it->second;
}
const LambdaModule& Instance::module(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw ValidationError("no module named '" + name + "'");
    return it->second;
}
const IndexMonoid& Instance::monoid() const {
    if (!mon) throw ValidationError("this instance declares no index monoid");
    return *mon;
}

Instance parse_instance_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    Instance ins;
    try {
        if (j.contains("monoid")) {
            const json& mj = j.at("monoid");
            if (mj.at("kind").get<std::string>() != "truncated-nat")
                throw ParseError("unknown monoid kind '" + mj.at("kind").get<std::string>() + "'");
            ins.mon.emplace(mj.at("bound").get<size_t>());
            ins.poset = ins.mon->base();
        }
        if (j.contains("poset")) {
            const json& pj = j.at("poset");
            std::vector<std::string> elements = pj.at("elements").get<std::vector<std::string>>();
            std::vector<std::pair<std::string, std::string>> rel;
            if (pj.contains("leq"))
                for (const json& e : pj.at("leq"))
                    rel.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
            PosetPtr p = IndexPoset::make(std::move(elements), rel);
            if (ins.mon) {
                if (p->elements() != ins.poset->elements() || p->covers() != ins.poset->covers())
                    throw ValidationError("declared poset disagrees with the monoid's index chain");
            } else {
                ins.poset = std::move(p);
            }
        }
        if (!ins.poset) throw ParseError("instance needs a poset or a monoid");
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }

    // Carrier fields accept the name of a functor declared in the same
    // instance or an inline functor definition.
    auto carrier_field = [&](const json& cj) -> FctPtr {
        if (cj.is_string()) return ins.functor(cj.get<std::string>());
        return functor_field(ins.poset, cj);
    };

    auto section = [&](const char* key, auto&& each) {
        if (!j.contains(key)) return;
        const json& sec = j.at(key);
        if (!sec.is_object())
            throw ParseError(std::string(key) + " must be an object of named entries");
        for (auto it = sec.begin(); it != sec.end(); ++it) each(it.key(), it.value());
    };

    section("functors", [&](const std::string& name, const json& fj) {
        named("functor", name, [&] { ins.functors[name] = functor_field(ins.poset, fj); });
    });
    section("morphisms", [&](const std::string& name, const json& mj) {
        named("morphism", name, [&] {
            FctPtr src = ins.functor(mj.at("src").get<std::string>());
            FctPtr dst = ins.functor(mj.at("dst").get<std::string>());
            FctMor f{src, dst, comp_field(mj.at("comp"), *src, *dst)};
            f.validate();
            ins.morphisms[name] = std::move(f);
        });
    });
    section("complexes", [&](const std::string& name, const json& cj) {
        named("complex", name, [&] {
            long lo = cj.at("lo").get<long>();
            long hi = cj.at("hi").get<long>();
            if (hi < lo) throw ParseError("hi must be >= lo");
            const json& tj = cj.at("terms");
            std::vector<FctPtr> terms;
            for (long n = lo; n <= hi; ++n) {
                std::string key = std::to_string(n);
                if (!tj.contains(key)) throw ParseError("missing term at degree " + key);
                terms.push_back(ins.functor(tj.at(key).get<std::string>()));
            }
            json dj = cj.contains("diffs") ? cj.at("diffs") : json::object();
            std::vector<FctMor> diffs;
            for (long n = lo; n < hi; ++n) {
                std::string key = std::to_string(n);
                if (!dj.contains(key)) {
                    diffs.push_back(zero_mor(terms[n - lo], terms[n - lo + 1]));
                    continue;
                }
                const FctMor& d = ins.morphism(dj.at(key).get<std::string>());
                if (d.src != terms[n - lo] || d.dst != terms[n - lo + 1])
                    throw ValidationError("diff at degree " + key +
                                          " does not connect the declared terms");
                diffs.push_back(d);
            }
            ins.complexes.insert_or_assign(
                name, Complex::make(ins.poset, lo, std::move(terms), std::move(diffs)));
        });
    });
    section("rings", [&](const std::string& name, const json& rj) {
        named("ring", name, [&] {
            if (!ins.mon) throw ValidationError("ring declared without an index monoid");
            LambdaRing a{*ins.mon, carrier_field(rj.at("carrier")), {}, false, RatMatrix()};
            const auto& dims = a.carrier->dims;
            for (auto it = rj.at("mult").begin(); it != rj.at("mult").end(); ++it) {
                auto [x, y] = split_key(*ins.poset, it.key(), ",");
                a.mult[{x, y}] =
                    matrix_field(it.value(), dims[ins.mon->add(x, y)], dims[x] * dims[y]);
            }
            if (rj.contains("unit")) {
                a.has_unit = true;
                a.unit = matrix_field(rj.at("unit"), dims[0], 1);
            }
            validate_ring(a);
            ins.rings.insert_or_assign(name, std::move(a));
        });
    });
    section("modules", [&](const std::string& name, const json& mj) {
        named("module", name, [&] {
            std::string rname = mj.at("ring").get<std::string>();
            const LambdaRing& a = ins.ring(rname);
            LambdaModule m{carrier_field(mj.at("carrier")), {}};
            for (auto it = mj.at("action").begin(); it != mj.at("action").end(); ++it) {
                auto [x, y] = split_key(*ins.poset, it.key(), ",");
                m.action[{x, y}] =
                    matrix_field(it.value(), m.carrier->dims[ins.mon->add(x, y)],
                                 a.carrier->dims[x] * m.carrier->dims[y]);
            }
            validate_module(a, m);
            ins.modules[name] = std::move(m);
            ins.module_ring[name] = std::move(rname);
        });
    });
    return ins;
}

std::string instance_text(const Instance& ins) {
    json j = json::object();
    if (ins.mon) {
        j["monoid"] = json{{"kind", "truncated-nat"}, {"bound", ins.mon->bound()}};
    } else {
        json leq = json::array();
        for (auto& [a, b] : ins.poset->covers())
            leq.push_back(json::array({ins.poset->name(a), ins.poset->name(b)}));
        j["poset"] = json{{"elements", ins.poset->elements()}, {"leq", std::move(leq)}};
    }
    if (!ins.functors.empty()) {
        json sec = json::object();
        for (auto& [name, m] : ins.functors) sec[name] = functor_json(*m);
        j["functors"] = std::move(sec);
    }
    if (!ins.morphisms.empty()) {
        json sec = json::object();
        for (auto& [name, f] : ins.morphisms) {
            std::string src, dst;
            for (auto& [fname, fm] : ins.functors) {
                if (fm == f.src) src = fname;
                if (fm == f.dst) dst = fname;
            }
            if (src.empty() || dst.empty())
                throw ValidationError("morphism '" + name + "' references unnamed functors");
            sec[name] = json{{"src", src}, {"dst", dst}, {"comp", comp_json(*ins.poset, f.comp)}};
        }
        j["morphisms"] = std::move(sec);
    }
    if (!ins.complexes.empty()) {
        json sec = json::object();
        for (auto& [name, x] : ins.complexes) {
            json terms = json::object(), diffs = json::object();
            for (long n = x.lo; n <= x.hi(); ++n) {
                std::string fname;
                for (auto& [fn, fm] : ins.functors)
                    if (fm == x.term(n)) {
                        fname = fn;
                        break;
                    }
                if (fname.empty())
                    throw ValidationError("complex '" + name + "' references unnamed functors");
                terms[std::to_string(n)] = fname;
            }
            for (long n = x.lo; n < x.hi(); ++n) {
                FctMor d = x.diff(n);
                if (d.is_zero()) continue;
                std::string mname;
                for (auto& [mn, mm] : ins.morphisms)
                    if (mm.src == d.src && mm.dst == d.dst && mor_equal(mm, d)) {
                        mname = mn;
                        break;
                    }
                if (mname.empty())
                    throw ValidationError("complex '" + name + "' references unnamed morphisms");
                diffs[std::to_string(n)] = mname;
            }
            sec[name] = json{{"lo", x.lo},
                             {"hi", x.hi()},
                             {"terms", std::move(terms)},
                             {"diffs", std::move(diffs)}};
        }
        j["complexes"] = std::move(sec);
    }
    auto carrier_json = [&](const FctPtr& c) -> json {
        for (auto& [fname, fm] : ins.functors)
            if (fm == c) return fname;
        return functor_json(*c);
    };
    if (!ins.rings.empty()) {
        json sec = json::object();
        for (auto& [name, a] : ins.rings) {
            json mult = json::object();
            for (auto& [key, m] : a.mult)
                mult[ins.poset->name(key.first) + "," + ins.poset->name(key.second)] =
                    matrix_json(m);
            json rj = json{{"carrier", carrier_json(a.carrier)}, {"mult", std::move(mult)}};
            if (a.has_unit) rj["unit"] = matrix_json(a.unit);
            sec[name] = std::move(rj);
        }
        j["rings"] = std::move(sec);
    }
    if (!ins.modules.empty()) {
        json sec = json::object();
        for (auto& [name, m] : ins.modules) {
            auto rit = ins.module_ring.find(name);
            if (rit == ins.module_ring.end())
                throw ValidationError("module '" + name + "' has no recorded ring");
            json action = json::object();
            for (auto& [key, mat] : m.action)
                action[ins.poset->name(key.first) + "," + ins.poset->name(key.second)] =
                    matrix_json(mat);
            sec[name] = json{{"ring", rit->second}, {"carrier", carrier_json(m.carrier)},
                             {"action", std::move(action)}};
        }
        j["modules"] = std::move(sec);
    }
    return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance_text(ss.str());
}

void save_instance(const Instance& ins, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << instance_text(ins);
}

std::string matrix_json_text(const RatMatrix& m) { return matrix_json(m).dump(); }

}  // namespace filtcat
