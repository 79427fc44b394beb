#pragma once

#include <optional>

#include "dynsu2/dynrep.hpp"
#include "dynsu2/haar.hpp"

namespace dynsu2 {

enum class TableFormat { Json, Csv };

/// Table exports used by the CLI.  With a point the entries are exact
/// rationals; otherwise expression strings.
std::string table_matelem(int N, MatBackend backend, const std::optional<Point>& at,
                          TableFormat fmt = TableFormat::Json);
std::string table_tfun(int N, const std::optional<Point>& at,
                       TableFormat fmt = TableFormat::Json);
std::string table_cg(int M, int N, int s, const std::optional<Point>& at,
                     TableFormat fmt = TableFormat::Json);
/// Dynamical CG coefficients C^{w1+w2+2s, w1 w2}_{k,lm} for k <= kmax.
std::string table_cg_dyn(int s, int kmax, const std::optional<Point>& at,
                         TableFormat fmt = TableFormat::Json);
std::string table_moments(int d, const std::optional<Point>& at,
                          TableFormat fmt = TableFormat::Json);
/// Schur pairing matrix h(t^M_{jk} (t^N_{lm})^*) computed through the kernel.
std::string table_schur(int M, int N, const std::optional<Point>& at,
                        TableFormat fmt = TableFormat::Json);

/// Parses "q=1/3,lambda=2/5,mu=7/9" into a Point.
Point parse_point(const std::string& text);

}  // namespace dynsu2
