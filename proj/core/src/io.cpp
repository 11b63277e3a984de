#include "skeincalc/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace skc {

namespace {

using nlohmann::json;

json coeff_json(const Int& c) {
    if (c.fits_slong_p()) return json(c.get_si());
    return json(c.get_str());
}

// generic table: rows descending by the second exponent, columns ascending v
std::string render_grid(const std::map<std::pair<int, int>, Int>& terms,
                        const char* row_var) {
    if (terms.empty()) return "0\n";
    std::set<int> cols, rows;
    for (auto& [k, c] : terms) {
        cols.insert(k.first);
        rows.insert(k.second);
    }
    size_t width = 4;
    for (auto& [k, c] : terms) {
        Int a = abs(c);
        width = std::max(width, a.get_str().size() + 2);
    }
    for (int v : cols)
        width = std::max(width, std::to_string(v).size() + 2);
    std::ostringstream os;
    os << row_var << " \\ v";
    std::string head(os.str());
    os.str("");
    os << head;
    for (int v : cols) {
        std::string s = std::to_string(v);
        os << std::string(width - s.size(), ' ') << s;
    }
    os << "\n";
    for (auto r = rows.rbegin(); r != rows.rend(); ++r) {
        std::string lbl = std::to_string(*r);
        os << lbl << std::string(head.size() - lbl.size(), ' ');
        for (int v : cols) {
            auto it = terms.find({v, *r});
            std::string s = (it == terms.end() || it->second == 0)
                                ? ""
                                : it->second.get_str();
            os << std::string(width - s.size(), ' ') << s;
        }
        os << "\n";
    }
    return os.str();
}

json slaurent_json(const SLaurent& p) {
    json arr = json::array();
    for (auto& [e, c] : p.terms()) arr.push_back({{"s", e}, {"c", coeff_json(c)}});
    return arr;
}

json zform_json(const ZForm& p) {
    json arr = json::array();
    for (auto& [k, c] : p.terms())
        arr.push_back({{"v", k.first}, {"z", k.second}, {"c", coeff_json(c)}});
    return arr;
}

json intlaurent_json(const IntLaurent2& p) {
    json arr = json::array();
    for (auto& [k, c] : p.terms())
        arr.push_back({{"v", k.first}, {"s", k.second}, {"c", coeff_json(c)}});
    return arr;
}

json lambda_json(const LambdaScalar& p) {
    json arr = json::array();
    for (auto& [v, f] : p.terms())
        arr.push_back({{"v", v}, {"num", slaurent_json(f.num())}, {"den", slaurent_json(f.den())}});
    return arr;
}

json partition_json(const Partition& p) {
    json arr = json::array();
    for (int x : p.parts) arr.push_back(x);
    return arr;
}

}  // namespace

std::string render_table(const ZForm& p) {
    return render_grid(p.terms(), "z");
}

std::string render_table(const IntLaurent2& p) {
    return render_grid(p.terms(), "s");
}

std::string json_of(const ZForm& p) { return zform_json(p).dump(); }
std::string json_of(const IntLaurent2& p) { return intlaurent_json(p).dump(); }
std::string json_of(const LambdaScalar& p) { return lambda_json(p).dump(); }
std::string json_of(const SLaurent& p) { return slaurent_json(p).dump(); }

std::string json_of(const AnnulusElement& q) {
    json arr = json::array();
    for (auto& [m, c] : q.terms()) {
        json up = json::array(), down = json::array();
        for (int k : m.up) up.push_back(k);
        for (int k : m.down) down.push_back(k);
        arr.push_back({{"h", up}, {"hstar", down}, {"coeff", lambda_json(c)}});
    }
    return arr.dump();
}

std::string json_of(const InvariantReport& r) {
    json j{{"knot", r.knot},
           {"framing", r.framing},
           {"lambda", partition_json(r.lambda)},
           {"mu", partition_json(r.mu)},
           {"a", intlaurent_json(r.a)},
           {"integral", r.integral},
           {"routes_agree", r.routes_agree},
           {"numerator", lambda_json(r.numerator)},
           {"denominator", lambda_json(r.denominator)},
           {"route_b", lambda_json(r.route_b)}};
    j["zform"] = r.zform ? zform_json(*r.zform) : json();
    json sp = json::object();
    for (auto& [n, v] : r.specializations) sp[std::to_string(n)] = slaurent_json(v);
    j["specializations"] = sp;
    return j.dump();
}

std::string json_of(const RudolphReport& r) {
    json j{{"knot", r.knot},
           {"framing", r.framing},
           {"homfly_mod2", zform_json(r.homfly_side)},
           {"kauffman_mod2", zform_json(r.kauffman_side)},
           {"equal", r.equal},
           {"shift", r.shift}};
    return j.dump();
}

std::string json_of(const MeridianCheckReport& r) {
    json knots = json::array();
    for (auto& e : r.knots) knots.push_back({{"knot", e.knot}, {"defined", e.defined}});
    return json{{"consistent", r.consistent}, {"knots", knots}}.dump();
}

std::string json_of(const ResolutionTrace& t) {
    json leaves = json::array();
    for (auto& l : t.leaves) {
        json b = json::array();
        for (int x : l.basis) b.push_back(x);
        leaves.push_back({{"basis", b}, {"coeff", zform_json(l.coeff)}, {"k", l.k}});
    }
    return json{{"root_k", t.root_k}, {"leaves", leaves}}.dump();
}

namespace {

PlanarDiagram pd_diagram_impl(const json& doc, bool* has_open, int* open_bottom,
                              int* open_top) {
    if (!doc.contains("crossings")) throw SkeinError("PD JSON: missing \"crossings\"");
    *has_open = doc.contains("open");
    if (*has_open) {
        *open_bottom = doc["open"].at("bottom").get<int>();
        *open_top = doc["open"].at("top").get<int>();
    }

    PlanarDiagram d;
    d.surface = {SurfaceKind::plane, 0, 0};
    std::map<int, int> out_slot;   // label -> out slot
    std::map<int, EndRef> in_ref;  // label -> in port

    for (auto& cj : doc["crossings"]) {
        int sign = cj.at("sign").get<int>();
        if (sign != 1 && sign != -1) throw SkeinError("PD JSON: sign must be +-1");
        auto& x = cj.at("x");
        if (!x.is_array() || x.size() != 4)
            throw SkeinError("PD JSON: \"x\" must have four edge labels");
        int c = d.new_crossing(static_cast<int8_t>(sign));
        int a = x[0].get<int>(), b = x[1].get<int>(), cc = x[2].get<int>(),
            dd = x[3].get<int>();
        auto put_in = [&](int label, EndRef e) {
            if (in_ref.count(label))
                throw SkeinError("PD JSON: label used as input twice: " +
                                 std::to_string(label));
            in_ref[label] = e;
        };
        auto put_out = [&](int label, int slot) {
            if (out_slot.count(label))
                throw SkeinError("PD JSON: label used as output twice: " +
                                 std::to_string(label));
            out_slot[label] = slot;
        };
        put_in(a, in_port(c, kUnder));
        put_in(b, in_port(c, kOver));
        put_out(cc, 2 * c + kUnder);
        put_out(dd, 2 * c + kOver);
    }

    if (*has_open) {
        d.surface = {SurfaceKind::rectangle, 1, 0};
        d.src_next.assign(1, 0);
        d.src_rad.assign(1, 0);
        // the bottom label feeds the arc; the top label ends at the sink
        if (!in_ref.count(*open_bottom))
            throw SkeinError("PD JSON: open.bottom label has no input endpoint");
        if (!out_slot.count(*open_top))
            throw SkeinError("PD JSON: open.top label has no output endpoint");
    }

    for (auto& [label, slot] : out_slot) {
        if (*has_open && label == *open_top) {
            d.next[slot] = sink_ref(0);
            d.rad[slot] = 0;
            continue;
        }
        auto it = in_ref.find(label);
        if (it == in_ref.end())
            throw SkeinError("PD JSON: unmatched edge label " + std::to_string(label));
        d.next[slot] = it->second;
        d.rad[slot] = 0;
    }
    if (*has_open) {
        d.src_next[0] = in_ref.at(*open_bottom);
        d.src_rad[0] = 0;
    }
    // validate: every input fed
    for (auto& [label, e] : in_ref) {
        bool fed = (*has_open && label == *open_bottom) || out_slot.count(label);
        if (!fed)
            throw SkeinError("PD JSON: unmatched edge label " + std::to_string(label));
    }
    return d;
}

}  // namespace

PlanarDiagram diagram_from_pd(const std::string& json_text) {
    json doc = json::parse(json_text);
    bool has_open = false;
    int ob = 0, ot = 0;
    PlanarDiagram d = pd_diagram_impl(doc, &has_open, &ob, &ot);
    if (has_open) throw SkeinError("PD JSON: expected a closed diagram");
    return d;
}

FramedTangleKnot knot_from_pd(const std::string& json_text, const std::string& name) {
    json doc = json::parse(json_text);
    bool has_open = false;
    int ob = 0, ot = 0;
    PlanarDiagram d = pd_diagram_impl(doc, &has_open, &ob, &ot);
    if (!has_open)
        throw SkeinError("PD JSON: a knot tangle needs the \"open\" field");
    TraversalInfo t = traverse(d);
    if (t.strands.empty() || t.strands[0].closed)
        throw SkeinError("PD JSON: the open arc is malformed");
    FramedTangleKnot k;
    k.name = name;
    k.framing = d.writhe();
    k.diagram = std::move(d);
    return k;
}

}  // namespace skc
