#include "dynsu2/report.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include <nlohmann/json.hpp>

namespace dynsu2 {

namespace {
uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}
}  // namespace

bool SuiteReport::passed() const {
  for (const auto& r : identities)
    if (r.status == "fail") return false;
  return true;
}

std::string SuiteReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["seed"] = opts.seed;
  j["bound"] = opts.bound;
  j["points"] = opts.points;
  j["exhaustive"] = opts.exhaustive;
  if (!opts.variant.empty()) j["variant"] = opts.variant;
  if (with_timing) j["wall_ms"] = wall_ms;
  j["status"] = passed() ? "pass" : "fail";
  auto arr = nlohmann::json::array();
  for (const auto& r : identities) {
    nlohmann::json e;
    e["id"] = r.id;
    e["anchor"] = r.anchor;
    e["indices"] = r.indices;
    e["points"] = r.points;
    e["status"] = r.status;
    if (r.status == "fail") {
      e["seed"] = r.seed;
      e["detail"] = r.detail;
    }
    arr.push_back(std::move(e));
  }
  j["identities"] = std::move(arr);
  return j.dump(2);
}

Suite::Suite(std::string name, const SuiteOptions& opts) : name_(std::move(name)), opts_(opts) {}

void Suite::add(const std::string& id, const std::string& anchor, const std::string& indices,
                std::function<bool(uint64_t, int)> fn) {
  IdentityResult meta;
  meta.id = id;
  meta.anchor = anchor;
  meta.indices = indices;
  meta.points = opts_.points;
  meta.seed = splitmix64(opts_.seed ^ fnv1a(id + "|" + indices));
  pending_.push_back({std::move(meta), std::move(fn)});
}

void Suite::skip(const std::string& id, const std::string& anchor, const std::string& why) {
  IdentityResult meta;
  meta.id = id;
  meta.anchor = anchor;
  meta.indices = why;
  meta.status = "skipped";
  pending_.push_back({std::move(meta), nullptr});
}

SuiteReport Suite::run() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name_;
  rep.opts = opts_;
  rep.identities.resize(pending_.size());

  std::atomic<size_t> next{0};
  unsigned jobs = opts_.jobs > 0 ? static_cast<unsigned>(opts_.jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<size_t>(pending_.size(), 1));
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= pending_.size()) return;
      auto& p = pending_[i];
      IdentityResult r = p.meta;
      if (!p.fn) {
        rep.identities[i] = std::move(r);
        continue;
      }
      try {
        r.status = p.fn(r.seed, opts_.points) ? "pass" : "fail";
      } catch (const std::exception& e) {
        r.status = "fail";
        r.detail = e.what();
      }
      rep.identities[i] = std::move(r);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"qdyb", &verify_qdyb},
      {"rll", &verify_rll},
      {"hopf", &verify_hopf},
      {"bialgebroid", &verify_bialgebroid},
      {"qseries", &verify_qseries},
      {"matelem", &verify_matelem},
      {"unitarity", &verify_unitarity},
      {"racah-orth", &verify_racah_orth},
      {"cg-corep", &verify_cg_corep},
      {"cg-dynrep", &verify_cg_dynrep},
      {"biedenharn", &verify_biedenharn},
      {"addition", &verify_addition},
      {"haar", &verify_haar_suite},
      {"schur", &verify_schur},
  };
  return reg;
}

bool is_suite_name(const std::string& name) {
  if (name == "all") return true;
  for (const auto& [n, fn] : suite_registry())
    if (n == name) return true;
  return false;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "all") {
    // concatenated run; kernel soundness rides along
    SuiteReport all;
    all.suite = "all";
    all.opts = opts;
    double ms = 0;
    for (const auto& [n, fn] : suite_registry()) {
      SuiteReport r = fn(opts);
      ms += r.wall_ms;
      for (auto& id : r.identities) {
        id.id = n + "/" + id.id;
        all.identities.push_back(std::move(id));
      }
    }
    SuiteReport k = verify_kernel(opts);
    ms += k.wall_ms;
    for (auto& id : k.identities) {
      id.id = "kernel/" + id.id;
      all.identities.push_back(std::move(id));
    }
    all.wall_ms = ms;
    return all;
  }
  for (const auto& [n, fn] : suite_registry())
    if (n == name) return fn(opts);
  throw DomainError("unknown suite: " + name);
}

}  // namespace dynsu2
