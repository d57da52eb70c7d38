#include "greenpoly/io.hpp"

#include "greenpoly/charring.hpp"

#include <algorithm>
#include <sstream>

namespace greenpoly {

namespace {

mpz_class parse_int(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where, "expected a decimal string");
    mpz_class v;
    const std::string s = j.get<std::string>();
    if (s.empty() || v.set_str(s, 10) != 0) throw ParseError(where, "bad integer '" + s + "'");
    return v;
}

mpq_class parse_rat(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where, "expected a rational string");
    const std::string s = j.get<std::string>();
    auto slash = s.find('/');
    mpz_class num, den = 1;
    if (s.empty() || num.set_str(s.substr(0, slash), 10) != 0 ||
        (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0))
        throw ParseError(where, "bad rational '" + s + "'");
    if (den == 0) throw ParseError(where, "zero denominator");
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

const json& coeffs_of(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError(where, "expected {\"coeffs\": [...]}");
    return j["coeffs"];
}

}  // namespace

json to_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return json{{"coeffs", a}};
}

json to_json(const QPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return json{{"coeffs", a}};
}

json to_json(const RatFun& f) {
    json j = json::object();
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

json to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
        rows.push_back(r);
    }
    return rows;
}

json to_json(const IntPolyMatrix& m) { return to_json(to_poly_matrix(m)); }

IntPoly intpoly_from_json(const json& j, const std::string& where) {
    const auto& a = coeffs_of(j, where);
    std::vector<mpz_class> c;
    for (size_t i = 0; i < a.size(); ++i)
        c.push_back(parse_int(a[i], where + "/coeffs/" + std::to_string(i)));
    return IntPoly(std::move(c));
}

QPoly qpoly_from_json(const json& j, const std::string& where) {
    const auto& a = coeffs_of(j, where);
    std::vector<mpq_class> c;
    for (size_t i = 0; i < a.size(); ++i)
        c.push_back(parse_rat(a[i], where + "/coeffs/" + std::to_string(i)));
    return QPoly(std::move(c));
}

RatFun ratfun_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError(where, "expected {\"num\": ..., \"den\": ...}");
    QPoly den = qpoly_from_json(j["den"], where + "/den");
    if (den.is_zero()) throw ParseError(where + "/den", "zero denominator");
    return RatFun(qpoly_from_json(j["num"], where + "/num"), den);
}

PolyMatrix polymatrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of rows");
    int r = static_cast<int>(j.size());
    int c = r ? static_cast<int>(j[0].size()) : 0;
    PolyMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        std::string wi = where + "/" + std::to_string(i);
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != c)
            throw ParseError(wi, "ragged matrix");
        for (int k = 0; k < c; ++k) m(i, k) = ratfun_from_json(j[i][k], wi + "/" + std::to_string(k));
    }
    return m;
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "pretty") return Format::Pretty;
    throw std::invalid_argument("unknown format '" + s + "' (json|csv|pretty)");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"') r += '"';
        r += ch;
    }
    return r + "\"";
}

json LabeledMatrix::to_json() const {
    json j = json::object();
    j["name"] = name;
    j["rows"] = rows;
    j["cols"] = cols;
    json m = json::array();
    for (const auto& r : cells) {
        json row = json::array();
        for (const auto& p : r) row.push_back(greenpoly::to_json(p));
        m.push_back(row);
    }
    j["entries"] = m;
    return j;
}

std::string LabeledMatrix::csv() const {
    std::ostringstream os;
    os << csv_escape(name);
    for (const auto& c : cols) os << ',' << csv_escape(c);
    os << '\n';
    for (size_t i = 0; i < cells.size(); ++i) {
        os << csv_escape(rows[i]);
        for (const auto& p : cells[i]) os << ',' << csv_escape(p.to_string());
        os << '\n';
    }
    return os.str();
}

std::string LabeledMatrix::pretty() const {
    std::vector<size_t> w(cols.size() + 1, 0);
    w[0] = name.size();
    for (const auto& r : rows) w[0] = std::max(w[0], r.size());
    for (size_t k = 0; k < cols.size(); ++k) {
        w[k + 1] = cols[k].size();
        for (const auto& r : cells) w[k + 1] = std::max(w[k + 1], r[k].to_string().size());
    }
    auto pad = [](const std::string& s, size_t n) { return s + std::string(n - s.size(), ' '); };
    std::ostringstream os;
    auto emit = [&](std::string line) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    };
    std::string head = pad(name, w[0]);
    for (size_t k = 0; k < cols.size(); ++k) head += "  " + pad(cols[k], w[k + 1]);
    emit(head);
    for (size_t i = 0; i < cells.size(); ++i) {
        std::string line = pad(rows[i], w[0]);
        for (size_t k = 0; k < cells[i].size(); ++k) line += "  " + pad(cells[i][k].to_string(), w[k + 1]);
        emit(line);
    }
    return os.str();
}

std::string diag_layout(const IntPolyMatrix& m, const std::vector<std::vector<int>>& blocks) {
    std::string s = "diag(";
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) s += ", ";
        const auto& idx = blocks[b];
        if (idx.size() == 1) {
            s += m[idx[0]][idx[0]].to_string();
            continue;
        }
        s += "[";
        for (size_t i = 0; i < idx.size(); ++i) {
            s += i ? ",[" : "[";
            for (size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + m[idx[i]][idx[k]].to_string();
            s += "]";
        }
        s += "]";
    }
    return s + ")";
}

}  // namespace greenpoly
