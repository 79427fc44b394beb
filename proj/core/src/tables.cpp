#include "dynsu2/tables.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "dynsu2/parser.hpp"

namespace dynsu2 {

namespace {

std::string scalar_entry(const Scalar& s, const std::optional<Point>& at) {
  if (at) return to_string(eval(s, *at));
  return to_string(s);
}

nlohmann::json element_entry(const AlgElement& e, const std::optional<Point>& at) {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : e.terms) {
    nlohmann::json t;
    t["monomial"] = m.str();
    t["coefficient"] = scalar_entry(c, at);
    arr.push_back(std::move(t));
  }
  return arr;
}

// flat rows of (index columns..., value)
struct Rows {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string emit(const nlohmann::json& meta, TableFormat fmt) const {
    if (fmt == TableFormat::Csv) {
      std::ostringstream os;
      for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
      os << "\n";
      for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) {
          os << (i ? "," : "");
          if (r[i].find(',') != std::string::npos)
            os << '"' << r[i] << '"';
          else
            os << r[i];
        }
        os << "\n";
      }
      return os.str();
    }
    nlohmann::json j = meta;
    j["schema"] = 1;
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json e;
      for (size_t i = 0; i < header.size(); ++i) e[header[i]] = r[i];
      arr.push_back(std::move(e));
    }
    j["entries"] = std::move(arr);
    return j.dump(2);
  }
};

}  // namespace

std::string table_matelem(int N, MatBackend backend, const std::optional<Point>& at,
                          TableFormat fmt) {
  nlohmann::json meta;
  meta["table"] = "matelem";
  meta["N"] = N;
  meta["backend"] = backend == MatBackend::Factored ? "factored" : "combinatorial";
  if (fmt == TableFormat::Json) {
    nlohmann::json j = meta;
    j["schema"] = 1;
    auto arr = nlohmann::json::array();
    for (int k = 0; k <= N; ++k)
      for (int jj = 0; jj <= N; ++jj) {
        nlohmann::json e;
        e["k"] = k;
        e["j"] = jj;
        e["entry"] = element_entry(matelem(N, k, jj, backend), at);
        arr.push_back(std::move(e));
      }
    j["entries"] = std::move(arr);
    return j.dump(2);
  }
  Rows rows;
  rows.header = {"k", "j", "monomial", "coefficient"};
  for (int k = 0; k <= N; ++k)
    for (int jj = 0; jj <= N; ++jj)
      for (const auto& [m, c] : matelem(N, k, jj, backend).terms)
        rows.rows.push_back(
            {std::to_string(k), std::to_string(jj), m.str(), scalar_entry(c, at)});
  return rows.emit(meta, fmt);
}

std::string table_tfun(int N, const std::optional<Point>& at, TableFormat fmt) {
  nlohmann::json meta;
  meta["table"] = "tfun";
  meta["N"] = N;
  Rows rows;
  rows.header = {"k", "j", "m", "value"};
  for (int k = 0; k <= N; ++k)
    for (int jj = 0; jj <= N; ++jj)
      for (int m = 0; m <= N; ++m) {
        if (m + jj - k < 0) continue;
        rows.rows.push_back({std::to_string(k), std::to_string(jj), std::to_string(m),
                             scalar_entry(tfun(N, k, jj, m), at)});
      }
  return rows.emit(meta, fmt);
}

std::string table_cg(int M, int N, int s, const std::optional<Point>& at, TableFormat fmt) {
  nlohmann::json meta;
  meta["table"] = "cg";
  meta["M"] = M;
  meta["N"] = N;
  meta["s"] = s;
  Rows rows;
  rows.header = {"j", "k", "l", "value"};
  for (int jj = 0; jj <= M; ++jj)
    for (int k = 0; k <= N; ++k) {
      if (jj + k - s < 0 || jj + k - s > M + N - 2 * s) continue;
      rows.rows.push_back({std::to_string(jj), std::to_string(k), std::to_string(jj + k - s),
                           scalar_entry(cg(M, N, s, jj, k), at)});
    }
  return rows.emit(meta, fmt);
}

std::string table_cg_dyn(int s, int kmax, const std::optional<Point>& at, TableFormat fmt) {
  nlohmann::json meta;
  meta["table"] = "cg-dyn";
  meta["s"] = s;
  Rows rows;
  rows.header = {"k", "l", "m", "value"};
  for (int k = 0; k <= kmax; ++k)
    for (int m = 0; m <= s + k; ++m)
      rows.rows.push_back({std::to_string(k), std::to_string(s + k - m), std::to_string(m),
                           scalar_entry(cg_dyn(s, k, s + k - m, m), at)});
  return rows.emit(meta, fmt);
}

std::string table_moments(int d, const std::optional<Point>& at, TableFormat fmt) {
  nlohmann::json meta;
  meta["table"] = "moments";
  meta["d"] = d;
  auto m = moments(d);
  Rows rows;
  rows.header = {"k", "value"};
  for (int k = 0; k <= d; ++k)
    rows.rows.push_back({std::to_string(k), scalar_entry(m[static_cast<size_t>(k)], at)});
  return rows.emit(meta, fmt);
}

std::string table_schur(int M, int N, const std::optional<Point>& at, TableFormat fmt) {
  nlohmann::json meta;
  meta["table"] = "schur";
  meta["M"] = M;
  meta["N"] = N;
  Rows rows;
  rows.header = {"j", "k", "l", "m", "value"};
  for (int j = 0; j <= M; ++j)
    for (int k = 0; k <= M; ++k)
      for (int l = 0; l <= N; ++l)
        for (int m = 0; m <= N; ++m) {
          Scalar v = haar(mul(matelem(M, j, k), star(matelem(N, l, m))));
          rows.rows.push_back({std::to_string(j), std::to_string(k), std::to_string(l),
                               std::to_string(m), scalar_entry(v, at)});
        }
  return rows.emit(meta, fmt);
}

Point parse_point(const std::string& text) {
  Point p;
  size_t pos = 0;
  bool saw_q = false;
  while (pos < text.size()) {
    size_t eq = text.find('=', pos);
    if (eq == std::string::npos) throw DomainError("bad point syntax: " + text);
    std::string name = text.substr(pos, eq - pos);
    size_t comma = text.find(',', eq);
    std::string val = text.substr(eq + 1, (comma == std::string::npos ? text.size() : comma) -
                                              eq - 1);
    Rat r;
    size_t slash = val.find('/');
    if (slash == std::string::npos)
      r = Rat(std::stol(val));
    else
      r = Rat(std::stol(val.substr(0, slash)), std::stol(val.substr(slash + 1)));
    r.canonicalize();
    if (name == "q") {
      p.q = r;
      saw_q = true;
    } else {
      // values are assigned to the exponential q^name
      p.vars[name] = r;
    }
    pos = comma == std::string::npos ? text.size() : comma + 1;
  }
  if (!saw_q) throw DomainError("point must assign q");
  if (p.q == 0 || p.q == 1 || p.q == -1) throw DomainError("q must avoid 0 and +-1");
  return p;
}

}  // namespace dynsu2
