#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <string>
#include <vector>

#include "tropical/parallel.hpp"

namespace tropical::cli {

// Where an expected value comes from: "published" (stated in the source
// literature), "trivial" (forced by a one-line argument) or "derived"
// (recomputed independently here).
struct Claim {
  std::string id;
  std::string description;
  std::string provenance;
  std::string expected;
  std::function<std::string(Parallelism)> compute;
};

struct ClaimReport {
  std::string id;
  std::string description;
  std::string provenance;
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed_ms = 0;
};

const std::vector<Claim>& claims();

// Runs one claim; exceptions become a failed report carrying the message.
ClaimReport run_claim(const Claim& claim, Parallelism par);

nlohmann::json to_json(const ClaimReport& report, bool timings);
std::string to_text(const ClaimReport& report, bool timings);

}  // namespace tropical::cli
