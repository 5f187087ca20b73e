#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kvisi/graph.hpp"
#include "kvisi/model.hpp"

namespace kvisi {

using nlohmann::json;

// Rationals serialize as plain integers when integral and as {"num","den"}
// objects otherwise; both forms are accepted on input.
inline json rational_to_json(const Rational& r) {
    if (r.is_integer()) return json(r.num());
    return json{{"num", r.num()}, {"den", r.den()}};
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_object() && j.contains("num") && j.contains("den"))
        return Rational(j["num"].get<long long>(), j["den"].get<long long>());
    throw std::invalid_argument("expected integer or {num,den} rational");
}

inline json to_json(const Representation& rep) {
    json j;
    j["family"] = family_name(family_of(rep));
    j["k"] = rep_k(rep);
    if (auto* r = std::get_if<SemiBarRep>(&rep)) {
        json lens = json::array();
        for (const Rational& len : r->lengths) lens.push_back(rational_to_json(len));
        j["lengths"] = lens;
    } else if (auto* r = std::get_if<BarRep>(&rep)) {
        json bars = json::array();
        for (const Bar& b : r->bars)
            bars.push_back(json{{"y", rational_to_json(b.y)},
                                {"x_left", rational_to_json(b.x_left)},
                                {"x_right", rational_to_json(b.x_right)}});
        j["bars"] = bars;
    } else if (auto* r = std::get_if<SemiArcRep>(&rep)) {
        json arcs = json::array();
        for (const SemiArc& a : r->arcs)
            arcs.push_back(json{{"side", a.side == AxisSide::pos ? "pos" : "neg"},
                                {"extent", rational_to_json(a.extent)}});
        j["arcs"] = arcs;
    } else {
        const std::vector<Arc>* arcs_in = nullptr;
        if (auto* a = std::get_if<ArcRep>(&rep)) arcs_in = &a->arcs;
        if (auto* c = std::get_if<CircleRep>(&rep)) arcs_in = &c->arcs;
        json arcs = json::array();
        for (const Arc& a : *arcs_in) {
            json ja;
            ja["rank"] = a.rank;
            if (a.full_circle) {
                ja["full_circle"] = true;
            } else {
                ja["start"] = rational_to_json(a.start);
                ja["extent"] = rational_to_json(a.extent);
            }
            arcs.push_back(ja);
        }
        j["arcs"] = arcs;
    }
    return j;
}

inline Representation rep_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw std::invalid_argument("representation JSON needs a \"family\" field");
    auto fam = family_from_name(j["family"].get<std::string>());
    if (!fam) throw std::invalid_argument("unknown family \"" +
                                          j["family"].get<std::string>() + "\"");
    int k = j.value("k", 0);

    switch (*fam) {
        case Family::semi_bar: {
            SemiBarRep rep;
            rep.k = k;
            for (const json& v : j.at("lengths")) rep.lengths.push_back(rational_from_json(v));
            return rep;
        }
        case Family::bar: {
            BarRep rep;
            rep.k = k;
            for (const json& v : j.at("bars")) {
                Bar b;
                b.y = rational_from_json(v.at("y"));
                b.x_left = rational_from_json(v.at("x_left"));
                b.x_right = rational_from_json(v.at("x_right"));
                rep.bars.push_back(b);
            }
            return rep;
        }
        case Family::semi_arc: {
            SemiArcRep rep;
            rep.k = k;
            for (const json& v : j.at("arcs")) {
                SemiArc a;
                std::string side = v.at("side").get<std::string>();
                if (side == "pos") a.side = AxisSide::pos;
                else if (side == "neg") a.side = AxisSide::neg;
                else throw std::invalid_argument("semi-arc side must be \"pos\" or \"neg\"");
                a.extent = rational_from_json(v.at("extent"));
                rep.arcs.push_back(a);
            }
            return rep;
        }
        case Family::arc:
        case Family::circle: {
            std::vector<Arc> arcs;
            for (const json& v : j.at("arcs")) {
                Arc a;
                a.rank = v.at("rank").get<int>();
                if (v.value("full_circle", false)) {
                    a.full_circle = true;
                    a.start = Rational(0);
                    a.extent = Rational(2);
                } else {
                    a.start = rational_from_json(v.at("start"));
                    a.extent = rational_from_json(v.at("extent"));
                }
                arcs.push_back(a);
            }
            if (*fam == Family::arc) {
                ArcRep rep;
                rep.arcs = std::move(arcs);
                rep.k = k;
                return rep;
            }
            CircleRep rep;
            rep.arcs = std::move(arcs);
            rep.k = k;
            return rep;
        }
    }
    throw std::invalid_argument("unreachable family");
}

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    return j;
}

inline Graph graph_from_json(const json& j) {
    Graph g(j.at("n").get<int>());
    for (const json& e : j.at("edges"))
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

// Accepts either a bare representation file or a search certificate that
// embeds one under "representation".
inline Representation load_rep_file(const std::string& path) {
    json j = load_json_file(path);
    if (j.is_object() && j.contains("representation"))
        return rep_from_json(j["representation"]);
    return rep_from_json(j);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace kvisi
