#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qvenn/channel.hpp"
#include "qvenn/classical.hpp"
#include "qvenn/codes.hpp"

namespace qvenn::cli {

/// Exit statuses of `run`.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kValidationError = 2;

/// `args` excludes the program name. Reports go to `out` (or --out FILE),
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// identity[:d] | depolarizing:p | erasure:p | unitary:FILE | FILE
QuantumChannel parse_channel_spec(const std::string& spec);

/// maximally-mixed:d | diag:p0,p1,... | FILE; the result has the single
/// label "Q".
DensityState parse_input_spec(const std::string& spec);

/// builtin:five-qubit | builtin:four-two | FILE
EncodingIsometry parse_code_spec(const std::string& spec);

/// bsc:q | noiseless:n | FILE
ClassicalChannel parse_classical_channel_spec(const std::string& spec);

/// uniform | p0,p1,...
Distribution parse_distribution_spec(const std::string& spec, std::size_t size);

}  // namespace qvenn::cli
