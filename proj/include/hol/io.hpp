#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hol/cartan2d.hpp"
#include "hol/hessian_map.hpp"
#include "hol/jets.hpp"
#include "hol/miner.hpp"
#include "hol/ricci3d.hpp"

namespace hol::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hol/1";

/// Malformed tensor documents and unreadable files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n", "order", "packing": "dense", "entries": [["i j k", "p/q"], ...]},
/// zero entries omitted, entries in row-major order.
Json to_json(const Tensor& t);

/// Same layout with "packing": "sym3", order 3 and one entry per sorted
/// multiset "i j k" (i <= j <= k) holding the tensor component A_ijk.
Json to_json(const Sym3Tensor& a);

/// Accepts either packing; "dense" order-3 input must be fully symmetric.
Sym3Tensor sym3_from_json(const Json& j);
Tensor tensor_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

Json to_json(const ImageRankReport& r);
Json to_json(const ContractionPattern& p);
Json to_json(const MinedIdentityBasis& b);
Json to_json(const JetReport& r);
Json to_json(const CartanReport& r);
Json to_json(const CartanSweep& s);
Json to_json(const ExactRicciSolution& s);
Json to_json(const FloatRicciSolution& s);

Json rational_vector(const std::vector<Rational>& v);
Json matrix_to_json(const RationalMatrix& m);
Json matrix_to_json(const Matrix<double>& m);

}  // namespace hol::io
