#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cpell/cli.hpp"
#include "cpell/concat.hpp"
#include "cpell/modscan.hpp"
#include "cpell/oracle.hpp"
#include "cpell/solver.hpp"

namespace cpell::cli {

namespace {

void check_count(std::uint64_t count, std::uint64_t limit, const char *what) {
  if (count < 1)
    throw UsageError(std::string(what) + " must be at least 1");
  if (count > limit)
    throw UsageError(std::string(what) + " exceeds the limit of " +
                     std::to_string(limit) + " (raise it with --limit)");
}

int cmd_gen(std::uint64_t count, const std::string &format,
            std::uint64_t limit, std::ostream &out) {
  check_count(count, limit, "--count");
  const auto terms = stream(count);
  const auto classified = classify_all(terms);
  if (format == "json")
    out << terms_to_json(classified);
  else if (format == "csv")
    out << terms_to_csv(classified);
  else
    out << terms_to_table(classified);
  return kOk;
}

int cmd_figure(std::uint64_t rows, std::uint64_t limit, std::ostream &out) {
  check_count(rows, limit, "--rows");
  std::vector<ClassifiedTerm> members;
  SolutionStream gen;
  while (members.size() < rows) {
    if (gen.produced() >= limit)
      throw UsageError("only " + std::to_string(members.size()) +
                       " members among the first " + std::to_string(limit) +
                       " terms");
    auto t = classify_term(gen.next());
    if (t.in_C)
      members.push_back(std::move(t));
  }
  for (const auto &m : members)
    out << figure_line(m) << '\n';
  out << figure_footer() << '\n';
  return kOk;
}

int cmd_verify(std::uint64_t n, std::uint64_t limit, std::ostream &out) {
  if (n < 1 || n > limit)
    throw DomainError("verify: term index must lie in [1, " +
                      std::to_string(limit) + "]");
  SolutionStream gen;
  while (gen.produced() + 1 < n)
    gen.next();
  const SolutionPair p = gen.next();
  const ClassifiedTerm t = classify_term(p);

  bool all = true;
  auto report = [&](const char *name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };
  out << "term " << n << ": x=" << to_string(p.x) << " y=" << to_string(p.y)
      << " strand=" << p.strand << '\n';
  report("solution invariants", satisfies_invariants(p));
  report("closed form agrees with recurrence", term_closed_form(n) == p);
  const bool identity = identity_holds(p.x, p.y);
  report("concatenation identity <=> in_C", identity == t.in_C);
  report("digit criterion <=> concatenation identity",
         lemma1_check(p.x, p.y) == identity);
  report("x+1 and y+1 are not powers of ten",
         !is_power_of_ten(p.x + 1) && !is_power_of_ten(p.y + 1));
  out << "in_C=" << (t.in_C ? "true" : "false") << '\n';
  return all ? kOk : kVerifyFailed;
}

std::string format_pairs(std::span<const ResiduePair> pairs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    os << (i ? ", " : "") << '(' << pairs[i].first << ", " << pairs[i].second
       << ')';
  return os.str();
}

int cmd_period(std::uint64_t m, std::ostream &out) {
  if (m < 2)
    throw UsageError("--modulus must be at least 2");
  const ResidueOrbit orbit = residue_orbit(m);
  out << "modulus=" << m << '\n';
  out << "period=" << orbit.period << '\n';
  out << "residues: " << format_pairs(orbit.one_period()) << '\n';
  if (m % 8 == 0)
    out << "mod-8 obstruction: "
        << (mod8_obstruction() ? "confirmed" : "FAILED") << '\n';
  return kOk;
}

int cmd_oracle(std::uint64_t max_y, std::uint64_t max_x, std::ostream &out) {
  if (max_y < 1)
    throw UsageError("--max-y must be at least 1");
  out << "solutions with y <= " << max_y << ":\n";
  for (const auto &[x, y] : oracle::brute_solutions(max_y))
    out << "  (" << to_string(x) << ", " << to_string(y) << ")\n";
  if (max_x != 0) {
    if (max_x < 2)
      throw UsageError("--max-x must be at least 2");
    out << "concatenation identities with x <= " << max_x << ":\n";
    for (const auto &[x, y] : oracle::brute_concat_identities(max_x))
      out << "  (" << to_string(x) << ", " << to_string(y) << ")\n";
  }
  return kOk;
}

int cmd_classify(std::uint64_t count, std::uint64_t limit, std::ostream &out) {
  check_count(count, limit, "--count");
  if (count < 2)
    throw UsageError("classify needs --count of at least 2");
  const auto terms = stream(count);
  const auto classified = classify_all(terms);
  const auto report = convergence_report(std::span<const SolutionPair>(terms));
  const auto runs = gap_runs(std::span<const ClassifiedTerm>(classified));
  const std::size_t members = count_members(classified);

  bool ratios_decrease = true, slopes_increase = true, above = true;
  for (const auto &r : report) {
    ratios_decrease = ratios_decrease && r.ratio_step_sign < 0;
    slopes_increase = slopes_increase && r.slope_step_sign > 0;
    above = above && r.above_limit;
  }
  const bool runs_ok = runs.max_run() <= 2;
  const bool no_pow10 = power10_exclusion(count);

  auto yes = [](bool b) { return b ? "yes" : "NO"; };
  out << "terms: " << count << '\n';
  out << "members of C: " << members << '\n';
  if (members != 0) {
    const BigRational density(BigInt(static_cast<unsigned long>(members)),
                              BigInt(static_cast<unsigned long>(count)));
    out << "density: " << density.str();
    if (density < BigRational(1))
      out << " = " << decimal_expand(density, 6) << "...";
    out << '\n';
  }
  out << "member indices:";
  for (const auto &t : classified)
    if (t.in_C)
      out << ' ' << t.pair.index;
  out << '\n';
  for (int k = 1; k <= 3; ++k)
    out << "strand " << k << " longest run outside C: " << runs.max_run(k)
        << '\n';
  out << "no three consecutive non-members per strand: " << yes(runs_ok) << '\n';
  out << "(y+1)/(x+1) strictly decreasing: " << yes(ratios_decrease) << '\n';
  out << "y/x strictly increasing: " << yes(slopes_increase) << '\n';
  out << "(y+1)/(x+1) > 1/sqrt(10) throughout: " << yes(above) << '\n';
  out << "last gap |10(y+1)^2-(x+1)^2|/(x+1)^2 ~ ";
  const auto &gap = report.back().limit_gap;
  if (sgn(gap.num()) == 0)
    out << "0\n";
  else
    out << "10^-" << (digit_count(gap.den()) - digit_count(gap.num())) << '\n';
  out << "x+1, y+1 never powers of ten: " << yes(no_pow10) << '\n';
  const bool ok =
      runs_ok && ratios_decrease && slopes_increase && above && no_pow10;
  return ok ? kOk : kVerifyFailed;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Positive solutions of x(x+1) = 10 y(y+1) and the decimal "
               "concatenation identity (y+1)/(x+1) = x∘(y+1) / y∘(x+1)"};
  app.require_subcommand(1);

  std::uint64_t limit = kDefaultCountLimit;
  app.add_option("--limit", limit, "Largest term count any command may generate")
      ->capture_default_str();

  std::function<int()> action;

  auto *gen = app.add_subcommand("gen", "Emit the first terms of the sequence");
  std::uint64_t gen_count = 0;
  std::string format = "table";
  gen->add_option("-n,--count", gen_count, "Number of terms")->required();
  gen->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  gen->callback([&] { action = [&] { return cmd_gen(gen_count, format, limit, out); }; });

  auto *fig = app.add_subcommand("figure", "Render the factorial/concatenation table");
  std::uint64_t rows = 7;
  fig->add_option("--rows", rows, "Number of members to render")->capture_default_str();
  fig->callback([&] { action = [&] { return cmd_figure(rows, limit, out); }; });

  auto *ver = app.add_subcommand("verify", "Check every property of one term");
  std::uint64_t verify_n = 0;
  auto *pos = ver->add_option("index", verify_n, "Term index (1-based)");
  auto *flag = ver->add_option("-n,--count", verify_n, "Term index (1-based)");
  pos->excludes(flag);
  ver->callback([&] {
    if (pos->count() + flag->count() == 0)
      throw CLI::RequiredError("term index");
    action = [&] { return cmd_verify(verify_n, limit, out); };
  });

  auto *per = app.add_subcommand("period", "Period of the sequence mod m");
  std::uint64_t modulus = 0;
  per->add_option("-m,--modulus", modulus, "Modulus m >= 2")->required();
  per->callback([&] { action = [&] { return cmd_period(modulus, out); }; });

  auto *orc = app.add_subcommand("oracle", "Brute-force search, independent of the generator");
  std::uint64_t max_y = 10'000, max_x = 0;
  orc->add_option("--max-y", max_y, "Search bound on y")->capture_default_str();
  orc->add_option("--max-x", max_x, "Also scan concatenation identities up to x");
  orc->callback([&] { action = [&] { return cmd_oracle(max_y, max_x, out); }; });

  auto *cls = app.add_subcommand("classify", "Membership, gaps and monotonicity summary");
  std::uint64_t cls_count = 100;
  cls->add_option("-n,--count", cls_count, "Number of terms")->capture_default_str();
  cls->callback([&] { action = [&] { return cmd_classify(cls_count, limit, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError &e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "failure: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

} // namespace cpell::cli
