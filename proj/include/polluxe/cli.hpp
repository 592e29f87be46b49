#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "polluxe/error.hpp"
#include "polluxe/serialize.hpp"

namespace polluxe::cli {

/// 0 ok, 1 parse or config error, 2 domain axiom, 3 computation contract.
int exit_code(ErrorKind kind);

/// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string config_hash(const Json& config);

/// Each runner takes the parsed config (with any --seed override folded in)
/// and returns the full report, or throws polluxe::Error.
Json run_analyze(const Json& config);
Json run_logpm(const Json& config);
Json run_synth(const Json& config);
Json run_decompose(const Json& config);
Json run_nonvanish(const Json& config);

struct Invocation {
    std::string command;
    std::string config_path;
    std::optional<std::string> out_path;
    std::optional<std::uint64_t> seed;
    bool quiet = false;
};

/// Top-level scalar fields as "key: value" lines.
std::string render_summary(const Json& report);

/// Reads the config, dispatches, writes the report and returns the exit code.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

} // namespace polluxe::cli
