#ifndef HOMCART_JSON_IO_HPP
#define HOMCART_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "homcart/connection.hpp"

namespace homcart {

/// {"dim": n, "structure": [[i, j, k, c], ...], "labels": [...]}
/// 0-based indices, i < j required; entries with i >= j are rejected.
LieAlgebra lie_algebra_from_json(const nlohmann::json& j);
nlohmann::json lie_algebra_to_json(const LieAlgebra& L);

/// {"kind": "cartan"|"principal", "h": ..., "g": ..., "k_basis": [[...]],
///  "p_basis": [[...]], "alpha": [[...]], "simply_connected": bool?}
/// alpha is stored column per h-basis vector: alpha[j] is the g-vector
/// alpha(e_j).
ConnectionData connection_from_json(const nlohmann::json& j, double tol = kDefaultTol);
nlohmann::json connection_to_json(const ConnectionData& c);

ConnectionData load_connection(const std::string& path, double tol = kDefaultTol);
void save_connection(const ConnectionData& c, const std::string& path);

}  // namespace homcart

#endif
