#pragma once

#include <string>

#include <json.hpp>

#include "bergman/toeplitz.hpp"

namespace bergman {

// {d, lambda, n, M, basis: [[ints]], entries: [[re, im], ...]} with entries row-major.
nlohmann::json to_json(const OperatorMatrix& op);
OperatorMatrix matrix_from_json(const nlohmann::json& j);

// Header "row,col,re,im", one line per entry, values with 17 significant digits.
std::string to_csv(const OperatorMatrix& op);
// Entries only; the CSV carries no space parameters.
Eigen::MatrixXcd entries_from_csv(const std::string& text);

// printf-style %.17g
std::string format_double(double x);

} // namespace bergman
