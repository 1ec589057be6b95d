#ifndef FROBEX_IO_HPP
#define FROBEX_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobex/catalog.hpp"
#include "frobex/hopf.hpp"

namespace frobex {

using Json = nlohmann::ordered_json;

/// Two-space indented text with a trailing newline.
inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

/// Parses JSON text; syntax errors carry the byte position.
inline Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline Json to_json(const CycScalar& s) { return s.to_string(); }

inline Json to_json(const Vec& v)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        a.push_back(v[i].to_string());
    return a;
}

inline Json to_json(const Mat& m)
{
    Json a = Json::array();
    for (const auto& row : m.dense()) {
        Json r = Json::array();
        for (const auto& s : row)
            r.push_back(s.to_string());
        a.push_back(std::move(r));
    }
    return a;
}

namespace detail {

inline const Json& member(const Json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object())
        throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": missing field '" + key + "'");
    return *it;
}

inline const Json& array_at(const Json& j, const std::string& path)
{
    if (!j.is_array())
        throw ParseError("at " + path + ": expected an array");
    return j;
}

inline std::size_t size_at(const Json& j, const std::string& path)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw ParseError("at " + path + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

inline CycScalar scalar_at(CycField f, const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return CycScalar(f, j.get<long>());
    if (!j.is_string())
        throw ParseError("at " + path + ": expected a scalar string");
    try {
        return parse_scalar(f, j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError("at " + path + ": " + e.what());
    }
}

inline Vec vec_at(CycField f, const Json& j, const std::string& path, std::size_t expected)
{
    array_at(j, path);
    if (j.size() != expected)
        throw ParseError("at " + path + ": expected " + std::to_string(expected) + " entries, found " +
                         std::to_string(j.size()));
    Vec v(f, expected);
    for (std::size_t i = 0; i < expected; ++i)
        v[i] = scalar_at(f, j[i], path + "/" + std::to_string(i));
    return v;
}

inline Mat mat_at(CycField f, const Json& j, const std::string& path, std::size_t rows, std::size_t cols)
{
    array_at(j, path);
    if (j.size() != rows)
        throw ParseError("at " + path + ": expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(j.size()));
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Vec r = vec_at(f, j[i], path + "/" + std::to_string(i), cols);
        for (std::size_t k = 0; k < cols; ++k)
            m.set(i, k, r[k]);
    }
    return m;
}

inline Mat mat_field(CycField f, const Json& j, const std::string& key, std::size_t rows, std::size_t cols)
{
    return mat_at(f, member(j, key, ""), "/" + key, rows, cols);
}

inline Vec vec_field(CycField f, const Json& j, const std::string& key, std::size_t n)
{
    return vec_at(f, member(j, key, ""), "/" + key, n);
}

inline CycField field_of(const Json& j)
{
    const Json& fj = member(j, "field", "");
    const std::size_t n = size_at(member(fj, "conductor", "/field"), "/field/conductor");
    try {
        return field_make(static_cast<unsigned>(n));
    } catch (const FieldError& e) {
        throw ParseError(std::string("at /field/conductor: ") + e.what());
    }
}

inline std::vector<std::string> labels_of(const Json& j, std::size_t d)
{
    auto it = j.find("labels");
    if (it == j.end())
        return default_labels(d);
    array_at(*it, "/labels");
    if (it->size() != d)
        throw ParseError("at /labels: expected " + std::to_string(d) + " labels");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < d; ++i) {
        if (!(*it)[i].is_string())
            throw ParseError("at /labels/" + std::to_string(i) + ": expected a string");
        out.push_back((*it)[i].get<std::string>());
    }
    return out;
}

inline Json field_json(CycField f)
{
    Json j = Json::object();
    j["conductor"] = f.conductor();
    return j;
}

} // namespace detail

inline Json to_json(const FrobAlgebra& fa)
{
    Json j = Json::object();
    j["field"] = detail::field_json(fa.field());
    j["dim"] = fa.dim();
    j["labels"] = fa.labels();
    j["m"] = to_json(fa.m());
    j["u"] = to_json(fa.u());
    j["delta"] = to_json(fa.delta());
    j["eps"] = to_json(fa.eps().row_vec(0));
    return j;
}

inline Json to_json(const ExtFrobAlgebra& e)
{
    Json j = to_json(e.frob);
    j["phi"] = to_json(e.ext.phi);
    j["theta"] = to_json(e.ext.theta);
    return j;
}

inline Json to_json(const HopfAlgebra& h)
{
    Json j = Json::object();
    j["field"] = detail::field_json(h.field);
    j["dim"] = h.dim;
    j["labels"] = h.labels;
    j["m"] = to_json(h.m);
    j["u"] = to_json(h.u);
    j["delta_h"] = to_json(h.delta_h);
    j["eps_h"] = to_json(h.eps_h.row_vec(0));
    j["S"] = to_json(h.S);
    j["S_inv"] = to_json(h.S_inv);
    j["Lambda"] = to_json(h.Lambda);
    j["lambda"] = to_json(h.lambda.row_vec(0));
    return j;
}

inline FrobAlgebra frob_from_json(const Json& j)
{
    const CycField f = detail::field_of(j);
    const std::size_t d = detail::size_at(detail::member(j, "dim", ""), "/dim");
    AlgebraData a{f, d, detail::labels_of(j, d), detail::mat_field(f, j, "m", d, d * d), detail::vec_field(f, j, "u", d)};
    CoalgebraData c{f, d, detail::mat_field(f, j, "delta", d * d, d), Mat::row(detail::vec_field(f, j, "eps", d))};
    return {std::move(a), std::move(c)};
}

inline ExtFrobAlgebra ext_from_json(const Json& j)
{
    FrobAlgebra fa = frob_from_json(j);
    const CycField f = fa.field();
    const std::size_t d = fa.dim();
    ExtStructure s{detail::mat_field(f, j, "phi", d, d), detail::vec_field(f, j, "theta", d)};
    return {std::move(fa), std::move(s)};
}

inline HopfAlgebra hopf_from_json(const Json& j)
{
    const CycField f = detail::field_of(j);
    const std::size_t d = detail::size_at(detail::member(j, "dim", ""), "/dim");
    return {f,
            d,
            detail::labels_of(j, d),
            detail::mat_field(f, j, "m", d, d * d),
            detail::vec_field(f, j, "u", d),
            detail::mat_field(f, j, "delta_h", d * d, d),
            Mat::row(detail::vec_field(f, j, "eps_h", d)),
            detail::mat_field(f, j, "S", d, d),
            detail::mat_field(f, j, "S_inv", d, d),
            detail::vec_field(f, j, "Lambda", d),
            Mat::row(detail::vec_field(f, j, "lambda", d))};
}

enum class DocumentKind { frobenius, extended, hopf };

/// Hopf documents carry "S", extended ones "phi".
inline DocumentKind document_kind(const Json& j)
{
    if (!j.is_object())
        throw ParseError("at /: expected an object");
    if (j.contains("S"))
        return DocumentKind::hopf;
    if (j.contains("phi"))
        return DocumentKind::extended;
    return DocumentKind::frobenius;
}

inline Json to_json(const Report& r)
{
    Json j = Json::object();
    j["passed"] = r.passed();
    Json items = Json::array();
    for (const auto& it : r.items()) {
        Json x = Json::object();
        x["name"] = it.name;
        x["passed"] = it.passed;
        if (!it.detail.empty())
            x["detail"] = it.detail;
        items.push_back(std::move(x));
    }
    j["items"] = std::move(items);
    return j;
}

inline Json to_json(const CandidateLattice& l)
{
    Json j = Json::object();
    j["description"] = l.description;
    Json v = Json::array();
    for (const auto& s : l.values)
        v.push_back(s.to_string());
    j["values"] = std::move(v);
    return j;
}

inline Json structure_json(const ExtStructure& s, const std::vector<Vec>& directions)
{
    Json j = Json::object();
    j["phi"] = to_json(s.phi);
    j["theta"] = to_json(s.theta);
    Json dirs = Json::array();
    for (const auto& v : directions)
        dirs.push_back(to_json(v));
    j["directions"] = std::move(dirs);
    return j;
}

inline Json to_json(const Classification& c)
{
    Json j = Json::object();
    Json s = Json::array();
    for (const auto& x : c.structures)
        s.push_back(structure_json(x.ext, x.directions));
    j["structures"] = std::move(s);
    j["classes"] = c.classes;
    Json un = Json::array();
    for (const auto& [a, b] : c.unresolved)
        un.push_back(Json::array({a, b}));
    j["unresolved"] = std::move(un);
    Json links = Json::array();
    for (const auto& l : c.links) {
        Json x = Json::object();
        x["from"] = l.from;
        x["to"] = l.to;
        x["via"] = l.via;
        x["morphism"] = to_json(l.morphism);
        links.push_back(std::move(x));
    }
    j["links"] = std::move(links);
    Json inv = Json::array();
    for (const auto& m : c.involutions)
        inv.push_back(to_json(m));
    j["involutions"] = std::move(inv);
    return j;
}

inline Json to_json(const Family& fam)
{
    Json j = Json::object();
    j["name"] = fam.name;
    j["title"] = fam.title;
    j["algebra"] = to_json(fam.algebra);
    j["lattice"] = to_json(fam.lattice);
    if (fam.witness_lattice)
        j["witness_lattice"] = to_json(*fam.witness_lattice);
    Json w = Json::array();
    for (std::size_t i = 0; i < fam.witnesses.size(); ++i) {
        Json x = Json::object();
        x["label"] = i < fam.witness_labels.size() ? fam.witness_labels[i] : "witness " + std::to_string(i);
        x["map"] = to_json(fam.witnesses[i]);
        w.push_back(std::move(x));
    }
    j["witnesses"] = std::move(w);
    Json cl = Json::array();
    for (const auto& c : fam.claimed) {
        Json x = structure_json(c.ext, c.directions);
        x["label"] = c.label;
        cl.push_back(std::move(x));
    }
    j["claimed"] = std::move(cl);
    if (fam.claimed_classes)
        j["claimed_classes"] = *fam.claimed_classes;
    j["evidence_only"] = fam.evidence_only;
    return j;
}

} // namespace frobex

#endif // FROBEX_IO_HPP
