#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "species/json_io.hpp"
#include "species/toyqft.hpp"

namespace species {

/// Outcome of one command: named checks with counters and a payload.
class RunReport {
 public:
  RunReport(std::string command, Json parameters = Json::object());

  void check(const std::string& name, bool ok);
  // Folds the checks and counters of another report into this one.
  void absorb(const RunReport& other);

  const std::string& command() const { return command_; }
  const Json& parameters() const { return parameters_; }
  Json& payload() { return payload_; }
  const Json& payload() const { return payload_; }
  std::uint64_t checked() const { return checked_; }
  std::uint64_t failures() const { return failures_; }
  bool passed() const { return failures_ == 0; }
  // Failure count of one named check; 0 if it never ran.
  std::uint64_t failures_of(const std::string& name) const;

  /// Payload fields at top level, plus command, parameters, status, counters
  /// and the per-check breakdown under "checks".
  Json to_json() const;

 private:
  std::string command_;
  Json parameters_;
  Json payload_ = Json::object();
  Json checks_ = Json::object();
  std::uint64_t checked_ = 0;
  std::uint64_t failures_ = 0;
};

/// Worker count: SPECIES_HOPF_THREADS if set and positive, else the hardware count.
unsigned thread_count();
/// Runs body(0..count-1) on up to thread_count() threads; rethrows the first exception.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Known cell counts (OEIS A034997) for n = 0..6.
std::uint64_t known_cell_count(int n);

RunReport hopf_axioms_report(int n);
RunReport antipode_report(int n);
RunReport basis_change_report(int n);
RunReport dimension_report(int n);
/// All of the above.
RunReport hopf_check(int n);

RunReport cells_count_report(int n);
RunReport cells_enumerate_report(int n, bool witnesses);
RunReport dynkin_report(int n);
RunReport steinmann_report(int n);
RunReport ruelle_report(int n);
RunReport glz_report(int n);
RunReport jacobi_report(int n);
RunReport arrows_report(int n);
RunReport series_report(unsigned order);
/// Exhaustive causal factorization up to n, retarded supports, and the
/// generating-function identities up to `order`.
RunReport causal_report(int n, unsigned order);

RunReport toy_demo(const Model& model, unsigned order);
RunReport toy_bogoliubov(const Model& model, unsigned order);

}  // namespace species
