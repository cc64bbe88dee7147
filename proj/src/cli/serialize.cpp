#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cpell/cli.hpp"
#include "cpell/concat.hpp"

namespace cpell::cli {

using nlohmann::json;

std::string decimal10(const ClassifiedTerm &t) {
  return decimal_expand(t.ratio, kDecimalDigits);
}

std::string terms_to_json(std::span<const ClassifiedTerm> terms) {
  json arr = json::array();
  for (const auto &t : terms) {
    arr.push_back({
        {"n", t.pair.index},
        {"x", to_string(t.pair.x)},
        {"y", to_string(t.pair.y)},
        {"in_C", t.in_C},
        {"delta_x", t.delta_x},
        {"delta_y", t.delta_y},
        {"ratio_num", to_string(t.ratio.num())},
        {"ratio_den", to_string(t.ratio.den())},
        {"decimal10", decimal10(t)},
    });
  }
  return arr.dump(2) + "\n";
}

namespace {

BigInt parse_big(const json &j, const char *key) {
  const auto &s = j.at(key).get_ref<const std::string &>();
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw UsageError(std::string("malformed integer in field ") + key);
  return v;
}

} // namespace

std::vector<ClassifiedTerm> terms_from_json(std::string_view text) {
  std::vector<ClassifiedTerm> out;
  try {
    const json arr = json::parse(text);
    if (!arr.is_array())
      throw UsageError("expected a JSON array of terms");
    for (const auto &j : arr) {
      ClassifiedTerm t;
      t.pair.index = j.at("n").get<std::uint64_t>();
      if (t.pair.index == 0)
        throw UsageError("term index must be positive");
      t.pair.strand = strand_of(t.pair.index);
      t.pair.x = parse_big(j, "x");
      t.pair.y = parse_big(j, "y");
      t.in_C = j.at("in_C").get<bool>();
      t.delta_x = j.at("delta_x").get<std::size_t>();
      t.delta_y = j.at("delta_y").get<std::size_t>();
      t.ratio = BigRational(parse_big(j, "ratio_num"), parse_big(j, "ratio_den"));

      if (sgn(t.pair.x) <= 0 || sgn(t.pair.y) <= 0 ||
          t.delta_x != digit_count(t.pair.x) ||
          t.delta_y != digit_count(t.pair.y) ||
          t.ratio != BigRational(t.pair.y + 1, t.pair.x + 1) ||
          t.in_C != (t.delta_x == t.delta_y + 1) ||
          j.at("decimal10").get<std::string>() != decimal10(t))
        throw UsageError("term " + std::to_string(t.pair.index) +
                         " has inconsistent fields");
      out.push_back(std::move(t));
    }
  } catch (const json::exception &e) {
    throw UsageError(std::string("invalid terms JSON: ") + e.what());
  } catch (const DomainError &e) {
    throw UsageError(std::string("invalid terms JSON: ") + e.what());
  }
  return out;
}

std::string terms_to_csv(std::span<const ClassifiedTerm> terms) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto &t : terms) {
    os << t.pair.index << ',' << to_string(t.pair.x) << ','
       << to_string(t.pair.y) << ',' << (t.in_C ? "true" : "false") << ','
       << t.delta_x << ',' << t.delta_y << ',' << to_string(t.ratio.num())
       << ',' << to_string(t.ratio.den()) << ',' << decimal10(t) << '\n';
  }
  return os.str();
}

std::string terms_to_table(std::span<const ClassifiedTerm> terms) {
  std::size_t wx = 1, wy = 1, wr = 5;
  for (const auto &t : terms) {
    wx = std::max(wx, to_string(t.pair.x).size());
    wy = std::max(wy, to_string(t.pair.y).size());
    wr = std::max(wr, t.ratio.str().size());
  }
  std::ostringstream os;
  os << std::left << std::setw(6) << "n" << std::right << std::setw(wx) << "x"
     << "  " << std::setw(wy) << "y" << "  " << std::left << std::setw(5) << "in_C"
     << std::setw(4) << "dx" << std::setw(4) << "dy" << std::setw(wr + 2) << "ratio"
     << "decimal" << '\n';
  for (const auto &t : terms) {
    os << std::left << std::setw(6) << t.pair.index << std::right << std::setw(wx)
       << to_string(t.pair.x) << "  " << std::setw(wy) << to_string(t.pair.y)
       << "  " << std::left << std::setw(5) << (t.in_C ? "yes" : "no")
       << std::setw(4) << t.delta_x << std::setw(4) << t.delta_y
       << std::setw(wr + 2) << t.ratio.str() << decimal10(t) << "..." << '\n';
  }
  return os.str();
}

std::string figure_line(const ClassifiedTerm &t) {
  const auto &x = t.pair.x;
  const auto &y = t.pair.y;
  const BigInt x1 = x + 1, y1 = y + 1;
  std::ostringstream os;
  os << to_string(x) << "!·" << to_string(y1) << "!/(" << to_string(y) << "!·"
     << to_string(x1) << "!) = " << to_string(concatenate(x, y1)) << '/'
     << to_string(concatenate(y, x1)) << " = " << t.ratio.str() << " = "
     << decimal10(t) << "...";
  return os.str();
}

std::string figure_footer() {
  // floor(10^d / sqrt(10)) = isqrt(10^(2d-1))
  const std::string digits =
      to_string(integer_sqrt(pow10(2 * kDecimalDigits - 1)));
  return "1/sqrt(10) = 0." +
         std::string(kDecimalDigits - digits.size(), '0') + digits + "...";
}

} // namespace cpell::cli
