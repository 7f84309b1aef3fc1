#ifndef SYMCRIT_CLI_HPP
#define SYMCRIT_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "symcrit/groups.hpp"

namespace symcrit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  ///< the mathematics disagrees with the theorem (a bug)
inline constexpr int kExitUsage = 2;     ///< bad input or usage

enum class Command { table, verify, selftest };
enum class Theorem { sym2, sym3, sym4, sym6, higher, monotone, cg, sym3root };
enum class Format { text, json, markdown };

Command parse_command(std::string_view s);
Theorem parse_theorem(std::string_view s);
Format parse_format(std::string_view s);
std::string to_string(Theorem t);

struct RunConfig {
    Command command = Command::table;
    Theorem theorem = Theorem::sym2;
    std::string group_spec;
    int n_max = 8;
    Format format = Format::text;
    std::uint64_t seed = 0;
    std::optional<std::string> output_path;
    std::size_t cap = kDefaultClosureCap;
};

/// Closure cap from SYMCRIT_CAP, or the default when unset. Throws ParseError
/// on a malformed value.
std::size_t cap_from_env();

/// `dihedral:<n>` | `tetrahedral` | `octahedral` | `icosahedral` | `file:<path>`,
/// where the file holds a JSON array of 2x2 matrices of parse_cyc strings.
GroupPtr parse_group_spec(std::string_view spec, std::size_t cap = kDefaultClosureCap);

int cmd_table(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
/// SYMCRIT_SELFTEST_FAIL=<name> forces the named invariant to fail.
int cmd_selftest(const RunConfig& cfg, std::ostream& out);

/// Validates cfg, dispatches, and maps errors to exit codes. Output goes to
/// cfg.output_path when set, otherwise to `out`; diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace symcrit::cli

#endif  // SYMCRIT_CLI_HPP
