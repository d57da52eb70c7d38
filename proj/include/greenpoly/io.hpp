#pragma once

#include "greenpoly/kernels.hpp"
#include "greenpoly/poly.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace greenpoly {

using nlohmann::json;

// Malformed input; where() is a json-pointer-like path into the document.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

// {"coeffs": ["c0", "c1", ...]}, ascending degree, decimal strings
json to_json(const IntPoly& p);
json to_json(const QPoly& p);  // rationals as "a/b"
json to_json(const RatFun& f);  // {"num": {...}, "den": {...}}
json to_json(const PolyMatrix& m);  // rows of RatFun objects
json to_json(const IntPolyMatrix& m);

IntPoly intpoly_from_json(const json& j, const std::string& where = "");
QPoly qpoly_from_json(const json& j, const std::string& where = "");
RatFun ratfun_from_json(const json& j, const std::string& where = "");
PolyMatrix polymatrix_from_json(const json& j, const std::string& where = "");

enum class Format { Json, Csv, Pretty };
Format parse_format(const std::string& s);  // throws std::invalid_argument

// A matrix of polynomials with row and column labels; integers are constants.
struct LabeledMatrix {
    std::string name;
    std::vector<std::string> rows, cols;
    std::vector<std::vector<IntPoly>> cells;

    json to_json() const;
    std::string csv() const;
    std::string pretty() const;
};

std::string csv_escape(const std::string& s);
// "diag(1, [[1,-q],[-q,1]], 1-q^2)" for a block-diagonal matrix; blocks are index groups
std::string diag_layout(const IntPolyMatrix& m, const std::vector<std::vector<int>>& blocks);

}  // namespace greenpoly
