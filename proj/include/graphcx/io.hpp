// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphcx/canonical.hpp"
#include "graphcx/chain.hpp"
#include "graphcx/halfedge.hpp"
#include "graphcx/homology.hpp"
#include "graphcx/symtensor.hpp"

namespace graphcx {

using ojson = nlohmann::ordered_json;

inline constexpr int kGcgVersion = 1;

// ----------------------------------------------------------------------
// .gcg graph files.  All labels are 1-based on disk; serialization is
// byte-stable (fixed key order, sorted pairing, 2-space indent).
// ----------------------------------------------------------------------

inline ojson gcg_json(const OrientedGraph& og) {
    const HalfEdgeGraph& g = og.graph;
    ojson j;
    j["version"] = kGcgVersion;
    j["operad"] = operad_name(g.operad);
    j["vertexCount"] = g.num_vertices;
    ojson pairing = ojson::array();
    for (const auto& [a, b] : g.edges()) pairing.push_back({a + 1, b + 1});
    j["pairing"] = pairing;
    ojson incidence = ojson::array();
    for (int d = 0; d < g.num_darts(); ++d) incidence.push_back(g.vertex_of[d] + 1);
    j["incidence"] = incidence;
    if (g.operad == Operad::Assoc) {
        ojson cyc = ojson::array();
        for (const auto& rot : g.rotation) {
            ojson one = ojson::array();
            for (int d : rot) one.push_back(d + 1);
            cyc.push_back(one);
        }
        j["cyclicOrders"] = cyc;
    }
    ojson vo = ojson::array();
    for (int v = 0; v < g.num_vertices; ++v) vo.push_back(og.orient.vertex_pos[v] + 1);
    j["vertexOrder"] = vo;
    ojson heads = ojson::array();
    for (int h : og.orient.head_dart) heads.push_back(h + 1);
    j["edgeHeads"] = heads;
    return j;
}

inline std::string gcg_text(const OrientedGraph& og) { return gcg_json(og).dump(2) + "\n"; }

inline OrientedGraph gcg_from_json(const ojson& j) {
    if (!j.contains("version") || j.at("version").get<int>() != kGcgVersion)
        throw std::invalid_argument("gcg: unsupported version");
    OrientedGraph og;
    og.graph.operad = operad_from_name(j.at("operad").get<std::string>());
    og.graph.num_vertices = j.at("vertexCount").get<int>();
    const auto& incidence = j.at("incidence");
    og.graph.vertex_of.reserve(incidence.size());
    for (const auto& v : incidence) og.graph.vertex_of.push_back(v.get<int>() - 1);
    og.graph.mate.assign(og.graph.vertex_of.size(), -1);
    for (const auto& pair : j.at("pairing")) {
        int a = pair.at(0).get<int>() - 1, b = pair.at(1).get<int>() - 1;
        if (a < 0 || b < 0 || a >= og.graph.num_darts() || b >= og.graph.num_darts())
            throw std::invalid_argument("gcg: pairing out of range");
        og.graph.mate.at(a) = b;
        og.graph.mate.at(b) = a;
    }
    if (og.graph.operad == Operad::Assoc) {
        for (const auto& cyc : j.at("cyclicOrders")) {
            std::vector<int> rot;
            for (const auto& d : cyc) rot.push_back(d.get<int>() - 1);
            og.graph.rotation.push_back(std::move(rot));
        }
    }
    for (const auto& p : j.at("vertexOrder")) og.orient.vertex_pos.push_back(p.get<int>() - 1);
    for (const auto& h : j.at("edgeHeads")) og.orient.head_dart.push_back(h.get<int>() - 1);

    auto bad = validate(og);
    if (!bad.empty()) throw std::invalid_argument("gcg: invalid graph: " + bad.front());
    return og;
}

inline void write_gcg(const std::string& path, const OrientedGraph& og) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << gcg_text(og);
}

inline OrientedGraph read_gcg(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    ojson j = ojson::parse(in);
    return gcg_from_json(j);
}

// ----------------------------------------------------------------------
// Chains and tensors: lists of (encoding, numerator, denominator) records.
// Encodings are self-describing, so readers rebuild the graphs from them.
// ----------------------------------------------------------------------

inline ojson chain_json(const Chain& c, Operad op) {
    ojson j;
    j["version"] = kGcgVersion;
    j["kind"] = "chain";
    j["operad"] = operad_name(op);
    ojson terms = ojson::array();
    for (const auto& [enc, t] : c.terms) {
        ojson one;
        one["encoding"] = enc;
        one["numerator"] = to_string(Int(t.coeff.get_num()));
        one["denominator"] = to_string(Int(t.coeff.get_den()));
        terms.push_back(one);
    }
    j["terms"] = terms;
    return j;
}

namespace detail {

// Decodes an encoding and checks it really is the canonical representative
// of a nonzero class.
inline CanonicalGraph class_from_encoding(const std::string& enc) {
    HalfEdgeGraph g = decode_encoding(enc);
    Canonicalized cc = canonicalize(with_default_orientation(g));
    if (cc.canon.encoding != enc || cc.coeff != 1)
        throw std::invalid_argument("encoding '" + enc + "' is not a canonical nonzero class");
    return std::move(cc.canon);
}

} // namespace detail

inline Chain chain_from_json(const ojson& j, Operad* op_out = nullptr) {
    if (j.at("kind").get<std::string>() != "chain")
        throw std::invalid_argument("chain file: kind != chain");
    if (op_out) *op_out = operad_from_name(j.at("operad").get<std::string>());
    Chain c;
    for (const auto& one : j.at("terms")) {
        Rat coeff = parse_rat(one.at("numerator").get<std::string>() + "/" +
                              one.at("denominator").get<std::string>());
        c.add(detail::class_from_encoding(one.at("encoding").get<std::string>()), coeff);
    }
    return c;
}

inline ojson tensor_json(const SymTensor& t, Operad op) {
    ojson j;
    j["version"] = kGcgVersion;
    j["kind"] = "tensor";
    j["operad"] = operad_name(op);
    ojson terms = ojson::array();
    for (const auto& [key, term] : t.terms) {
        ojson one;
        ojson factors = ojson::array();
        for (const auto& f : term.factors) factors.push_back(f.encoding);
        one["factors"] = factors;
        one["numerator"] = to_string(Int(term.coeff.get_num()));
        one["denominator"] = to_string(Int(term.coeff.get_den()));
        terms.push_back(one);
    }
    j["terms"] = terms;
    return j;
}

inline SymTensor tensor_from_json(const ojson& j, Operad* op_out = nullptr) {
    if (j.at("kind").get<std::string>() != "tensor")
        throw std::invalid_argument("tensor file: kind != tensor");
    if (op_out) *op_out = operad_from_name(j.at("operad").get<std::string>());
    SymTensor t;
    for (const auto& one : j.at("terms")) {
        std::vector<CanonicalGraph> factors;
        for (const auto& enc : one.at("factors"))
            factors.push_back(detail::class_from_encoding(enc.get<std::string>()));
        Rat coeff = parse_rat(one.at("numerator").get<std::string>() + "/" +
                              one.at("denominator").get<std::string>());
        t.add(std::move(factors), coeff);
    }
    return t;
}

// ----------------------------------------------------------------------
// Homology tables.  The manifest pins the conventions so runs compare.
// ----------------------------------------------------------------------

inline ojson conventions_json() {
    ojson j;
    j["coefficients"] = "Q";
    j["degreeParity"] = "vertexCountMod2";
    j["polygonSum"] = "orderedDirectedTuplesTimesHalf";
    j["orientation"] = "vertexOrderPlusEdgeDirections";
    return j;
}

inline ojson homology_json(const HomologyTable& t) {
    ojson j;
    j["operad"] = operad_name(t.operad);
    j["loops"] = t.loop_number;
    j["conventions"] = conventions_json();
    ojson rows = ojson::array();
    for (const auto& r : t.rows) {
        ojson one;
        one["vertices"] = r.vertices;
        one["dim"] = r.dim;
        one["boundaryRank"] = r.boundary_rank;
        one["homologyRank"] = r.homology_rank;
        rows.push_back(one);
    }
    j["rows"] = rows;
    j["eulerIdentity"] = t.euler_identity_holds();
    return j;
}

inline std::string homology_csv(const HomologyTable& t) {
    std::ostringstream os;
    os << "operad,loops,vertices,dim,boundary_rank,homology_rank\n";
    for (const auto& r : t.rows)
        os << operad_name(t.operad) << "," << t.loop_number << "," << r.vertices << "," << r.dim
           << "," << r.boundary_rank << "," << r.homology_rank << "\n";
    return os.str();
}

} // namespace graphcx
