#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpell/classify.hpp"

namespace cpell::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

inline constexpr std::uint64_t kDefaultCountLimit = 10'000;
inline constexpr std::size_t kDecimalDigits = 10;

/// Fixed CSV column order.
inline constexpr std::string_view kCsvHeader =
    "n,x,y,in_C,delta_x,delta_y,ratio_num,ratio_den,decimal10";

/// Truncated 10-digit expansion of a term's ratio, without "...".
std::string decimal10(const ClassifiedTerm &t);

/// JSON array of term objects. Big integers are decimal strings.
std::string terms_to_json(std::span<const ClassifiedTerm> terms);
/// Inverse of terms_to_json. Throws UsageError on malformed or
/// inconsistent input (ratio or digit counts not matching x, y).
std::vector<ClassifiedTerm> terms_from_json(std::string_view text);

std::string terms_to_csv(std::span<const ClassifiedTerm> terms);
std::string terms_to_table(std::span<const ClassifiedTerm> terms);

/// One line of the concatenation figure for a member (x, y):
/// "x!·(y+1)!/(y!·(x+1)!) = x∘(y+1)/y∘(x+1) = p/q = 0.dddddddddd..."
std::string figure_line(const ClassifiedTerm &t);
/// "1/sqrt(10) = 0.3162277660..." computed with integer square roots.
std::string figure_footer();

/// Dispatches a subcommand: gen, figure, verify, period, oracle, classify.
/// argv[0] is the program name.
int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

} // namespace cpell::cli
