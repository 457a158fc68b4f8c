#include <iomanip>
#include <ostream>

#include "segame/cli.hpp"

namespace segame::cli {

const char* rule_name(StrategyRule rule) noexcept {
  return rule == StrategyRule::leave_baseline ? "algorithm1" : "eq7";
}

void RunReport::write(std::ostream& out) const {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(12);
  out << kReportHeader << '\n'
      << "input\t" << input << '\n'
      << "nodes\t" << nodes << '\n'
      << "edges\t" << edges << '\n'
      << "directed\t" << (directed ? 1 : 0) << '\n'
      << "overlapping\t" << (overlapping ? 1 : 0) << '\n'
      << "rule\t" << rule_name(rule) << '\n'
      << "tau_n\t" << tau_n << '\n'
      << "gamma\t" << gamma << '\n'
      << "max_iterations\t" << max_iterations << '\n'
      << "workers\t" << workers << '\n'
      << "seed\t";
  if (seed) {
    out << *seed;
  } else {
    out << "none";
  }
  out << '\n'
      << "iterations\t" << iterations() << '\n'
      << "communities\t" << communities << '\n'
      << "memberships\t" << memberships << '\n'
      << "replications\t" << replications << '\n'
      << "seconds_total\t" << seconds_total() << '\n'
      << "seconds_game\t" << seconds_game << '\n'
      << "seconds_overlap\t" << seconds_overlap << '\n';
  if (entropy) out << "entropy_2d\t" << *entropy << '\n';
  out << "# sweep\tmoved\tdelta_sum\tseconds\n";
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    out << "sweep\t" << i + 1 << '\t' << sweeps[i].moved << '\t' << sweeps[i].delta_sum << '\t'
        << sweeps[i].seconds << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace segame::cli
