#include "bezgw/query.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>

#include "bezgw/bezforms.hpp"
#include "bezgw/degree.hpp"
#include "bezgw/gw.hpp"
#include "bezgw/parse.hpp"
#include "bezgw/residue.hpp"

namespace bezgw {

namespace {

using json = nlohmann::ordered_json;

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json gwclass_json(const GWClass& c) {
    json diag = json::array();
    for (auto& sc : c.diagonal) diag.push_back(sc.str());
    return json{{"diagonal", diag},
                {"hyperbolics", c.hyperbolics},
                {"field", c.field->descriptor()}};
}

json invariants_json(const FormInvariants& inv) {
    json out;
    out["rank"] = inv.rank;
    out["discriminant"] = inv.discriminant.str();
    if (inv.signature)
        out["signature"] = std::to_string(*inv.signature);
    else
        out["signature"] = "skipped";
    if (inv.hasse_witt) {
        json hw = json::object();
        for (auto& [p, s] : *inv.hasse_witt)
            hw[p == -1 ? "real" : p.get_str()] = std::to_string(s);
        out["hasse_witt"] = hw;
    }
    return out;
}

std::vector<std::pair<FieldElement, unsigned>> parse_roots(const std::string& text,
                                                           const FieldPtr& k) {
    std::vector<std::pair<FieldElement, unsigned>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.rfind(':');
        if (colon == std::string::npos) throw Error("roots syntax is r1:m1,r2:m2,...");
        unsigned m = (unsigned)std::stoul(item.substr(colon + 1));
        if (m == 0) throw Error("root multiplicity must be positive");
        out.push_back({parse_element(item.substr(0, colon), k), m});
    }
    if (out.empty()) throw Error("empty root list");
    return out;
}

struct TextBlock {
    std::string title;
    std::string body;
};

}  // namespace

RunResult run(const Query& q) {
    FieldPtr k;
    std::optional<PointedRationalFunction> F;
    std::optional<SplitData> sd;
    try {
        k = make_field(q.field_descriptor);
        auto [fr, gr] = parse_rational_function(q.expression, k);
        F = PointedRationalFunction::normalize(fr, gr);
        if (!q.roots.empty()) sd = split_data(*F, parse_roots(q.roots, k));
    } catch (const Error& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }

    bool all = false;
    std::vector<std::string> keys;
    for (auto& o : q.outputs)
        if (o == "all")
            all = true;
        else
            keys.push_back(o);
    bool ordered = k->ordered();
    auto try_split = [&]() -> bool {
        if (sd) return true;
        try {
            sd = split_data(*F);
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    if (all) {
        keys = {"bez", "s", "invariants", "a1", "unstable", "verify"};
        if (ordered) {
            keys.push_back("degree");
            keys.push_back("cauchy");
        }
        if (try_split()) {
            for (auto* o : {"new", "van", "transitions", "gram:newton", "gram:vandermonde"})
                keys.push_back(o);
        }
        keys.push_back("gram:monomial");
        keys.push_back("gram:horner");
    }
    if (keys.empty()) keys = {"invariants"};

    json out;
    std::vector<TextBlock> blocks;
    int code = 0;
    auto need_split = [&](const std::string& key) -> bool {
        if (try_split()) return true;
        code = 1;
        try {
            sd = split_data(*F);  // rethrow for the message
        } catch (const Error& e) {
            blocks.push_back({key, std::string("error: ") + e.what()});
            out[key] = std::string("error: ") + e.what();
        }
        return false;
    };
    auto emit_matrix = [&](const std::string& key, const Matrix& m) {
        out[key] = matrix_json(m);
        blocks.push_back({key, m.str()});
    };

    try {
        for (auto& key : keys) {
            if (key == "bez") {
                emit_matrix(key, bezout_matrix(*F));
            } else if (key == "s") {
                emit_matrix(key, hankel_matrix(*F));
            } else if (key == "new") {
                if (need_split(key)) emit_matrix(key, newton_matrix(*F, *sd));
            } else if (key == "van") {
                if (need_split(key)) emit_matrix(key, vandermonde_matrix(*F, *sd));
            } else if (key == "transitions") {
                if (need_split(key)) {
                    auto tm = transition_matrices(*F, *sd);
                    out[key] = json{{"L", matrix_json(tm.L)},
                                    {"M", matrix_json(tm.M)},
                                    {"N", matrix_json(tm.N)},
                                    {"N0", matrix_json(tm.N0)}};
                    blocks.push_back({"L", tm.L.str()});
                    blocks.push_back({"M", tm.M.str()});
                    blocks.push_back({"N", tm.N.str()});
                    blocks.push_back({"N0", tm.N0.str()});
                }
            } else if (key.rfind("gram:", 0) == 0) {
                std::string which = key.substr(5);
                if (which == "monomial") {
                    emit_matrix(key, gram_matrix(*F, GramBasis::DualMonomial));
                } else if (which == "horner") {
                    emit_matrix(key, gram_matrix(*F, GramBasis::DualHorner));
                } else if (which == "primal") {
                    emit_matrix(key, gram_matrix(*F, GramBasis::MonomialPrimal));
                } else if (which == "newton") {
                    if (need_split(key)) emit_matrix(key, gram_matrix(*F, GramBasis::DualNewton, sd));
                } else if (which == "vandermonde") {
                    if (need_split(key))
                        emit_matrix(key, gram_matrix(*F, GramBasis::DualVandermonde, sd));
                } else {
                    throw Error("unknown gram basis: " + which);
                }
            } else if (key == "invariants") {
                auto inv = invariants(bezout_matrix(*F));
                out[key] = invariants_json(inv);
                std::ostringstream os;
                os << "rank        " << inv.rank << "\n";
                os << "disc        " << inv.discriminant.str() << "\n";
                os << "signature   "
                   << (inv.signature ? std::to_string(*inv.signature) : "skipped") << "\n";
                if (inv.hasse_witt) {
                    os << "hasse       ";
                    if (inv.hasse_witt->empty()) os << "+1 at every place";
                    for (auto& [p, s] : *inv.hasse_witt)
                        os << "(" << (p == -1 ? "real" : p.get_str()) << ": " << s << ") ";
                    os << "\n";
                }
                blocks.push_back({key, os.str()});
            } else if (key == "degree") {
                if (!ordered) {
                    out[key] = "skipped";
                    blocks.push_back({key, "skipped (no ordering)"});
                } else {
                    int d = topological_degree(*F);
                    out[key] = std::to_string(d);
                    blocks.push_back({key, std::to_string(d)});
                }
            } else if (key == "cauchy") {
                if (!ordered) {
                    out[key] = "skipped";
                    blocks.push_back({key, "skipped (no ordering)"});
                } else {
                    int d = global_cauchy_index(F->f(), F->g());
                    out[key] = std::to_string(d);
                    blocks.push_back({key, std::to_string(d)});
                }
            } else if (key == "a1") {
                GWClass c = a1_degree(*F);
                out[key] = gwclass_json(c);
                blocks.push_back({key, c.str()});
            } else if (key == "unstable") {
                auto u = unstable_class(*F);
                out[key] = json{{"w", gwclass_json(u.w)}, {"d", u.d.str()}};
                blocks.push_back({key, "w = " + u.w.str() + ", d = " + u.d.str()});
            } else if (key == "verify") {
                auto rep = verify_congruences(*F, try_split() ? sd : std::nullopt);
                json items = json::array();
                std::ostringstream os;
                for (auto& it : rep.items) {
                    items.push_back(json{{"identity", it.name},
                                         {"pass", it.pass},
                                         {"detail", it.detail}});
                    os << it.name << ": " << (it.pass ? "pass" : "FAIL " + it.detail) << "\n";
                }
                out[key] = items;
                blocks.push_back({key, os.str()});
                if (!rep.all_pass()) code = 2;
            } else {
                throw Error("unknown output: " + key);
            }
        }
    } catch (const Error& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }

    if (q.json) return {code, out.dump(2) + "\n"};
    std::ostringstream os;
    for (auto& b : blocks) {
        os << b.title << ":\n" << b.body;
        if (b.body.empty() || b.body.back() != '\n') os << "\n";
        os << "\n";
    }
    return {code, os.str()};
}

}  // namespace bezgw
