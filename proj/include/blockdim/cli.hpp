#pragma once

#include "blockdim/weightlat.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace blockdim {

enum class OutputFormat { Table, Json, Csv };

struct JobSpec {
  char type_letter = 'A';
  int rank = 1;
  std::string lambda;                 ///< rational coordinates, "1/2,0"
  std::vector<std::string> v_weights; ///< one dominant integral weight per report
  OutputFormat format = OutputFormat::Table;
  OrderVariant order = OrderVariant::RootLattice;
  bool fast_path = false;
  std::string kl_dump_path;           ///< empty: no dump
  std::optional<std::pair<std::string, std::string>> ext_words;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInconsistent = 2;

/// Parses argv into a JobSpec. Returns the exit code to use when parsing ends
/// the run (help, errors); std::nullopt means run the job.
std::optional<int> parse_job(int argc, const char* const* argv, JobSpec& job, std::ostream& out, std::ostream& err);

/// Runs one job. Exit codes: 0 success, 1 input error, 2 internal inconsistency.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

} // namespace blockdim
