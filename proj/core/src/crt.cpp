#include "modinv/crt.hpp"

#include "modinv/modmath.hpp"

#include <future>
#include <optional>

namespace modinv {

Congruence::Congruence(const Int& residue, const Int& modulus) : modulus_(modulus) {
  if (modulus <= 1) throw PreconditionError("congruence modulus must be greater than 1, got " + to_string(modulus));
  residue_ = floor_mod(residue, modulus);
}

bool Congruence::satisfied_by(const Int& x) const { return floor_mod(x, modulus_) == residue_; }

IncompatibleCongruencesError::IncompatibleCongruencesError(std::size_t first, std::size_t second, Int first_modulus,
                                                           Int second_modulus, Int gcd)
    : NoSolutionError(gcd, "no solution: moduli " + to_string(first_modulus) + "," + to_string(second_modulus) +
                               " (gcd " + to_string(gcd) + ") incompatible"),
      first_(first),
      second_(second),
      first_modulus_(std::move(first_modulus)),
      second_modulus_(std::move(second_modulus)) {}

CrtSolution solve_coprime(std::span<const Congruence> system, const SignStrategy& strategy) {
  if (system.empty()) throw PreconditionError("solve_coprime: empty system");
  Int x = system.front().residue();
  Int modulus = system.front().modulus();
  for (const Congruence& next : system.subspan(1)) {
    const ExtInverseOutcome step = ext_mod_inverse(Int(next.residue() - x), modulus, next.modulus(), strategy);
    if (step.gcd != 1) throw NotCoprimeError(step.gcd);
    x += modulus * *step.value;
    modulus *= next.modulus();
  }
  return {std::move(x), std::move(modulus)};
}

namespace {

// x = a1 (mod m1), x = a2 (mod m2); nullopt carries the gcd when incompatible.
struct PairResult {
  std::optional<CrtSolution> solution;
  Int gcd;
};

PairResult merge(const Int& a1, const Int& m1, const Int& a2, const Int& m2, const SignStrategy& strategy) {
  const ExtInverseOutcome step = ext_mod_inverse(Int(a2 - a1), m1, m2, strategy);
  if (!step.is_defined()) return {std::nullopt, step.gcd};
  // value < m2/d, so m1 * value + a1 < m1 * m2 / d.
  return {CrtSolution{Int(m1 * *step.value + a1), Int(m1 * step.reduced_modulus)}, step.gcd};
}

struct Node {
  CrtSolution solution;
  std::size_t first;  // original indices covered: [first, last]
  std::size_t last;
};

[[noreturn]] void report_incompatible(std::span<const Congruence> system, const Node& left, const Node& right) {
  // A system is solvable iff every pair is; both halves are solvable, so some
  // cross pair must fail.
  for (std::size_t i = left.first; i <= left.last; ++i) {
    for (std::size_t j = right.first; j <= right.last; ++j) {
      const Int d = gcd(system[i].modulus(), system[j].modulus());
      if ((system[i].residue() - system[j].residue()) % d != 0) {
        throw IncompatibleCongruencesError(i, j, system[i].modulus(), system[j].modulus(), d);
      }
    }
  }
  throw Error("solve_general: merge failed but no incompatible pair was found");
}

Node merge_nodes(std::span<const Congruence> system, const Node& left, const Node& right,
                 const SignStrategy& strategy) {
  PairResult merged =
      merge(left.solution.x, left.solution.modulus, right.solution.x, right.solution.modulus, strategy);
  if (!merged.solution) report_incompatible(system, left, right);
  return {std::move(*merged.solution), left.first, right.last};
}

}  // namespace

CrtSolution solve_pair(const Congruence& first, const Congruence& second, const SignStrategy& strategy) {
  PairResult merged = merge(first.residue(), first.modulus(), second.residue(), second.modulus(), strategy);
  if (!merged.solution) {
    throw IncompatibleCongruencesError(0, 1, first.modulus(), second.modulus(), std::move(merged.gcd));
  }
  return std::move(*merged.solution);
}

std::size_t balanced_rounds(std::size_t n) {
  std::size_t rounds = 0;
  for (std::size_t width = 1; width < n; width *= 2) ++rounds;
  return rounds;
}

CrtSolution solve_general(std::span<const Congruence> system, const SolveOptions& options, SolveStats* stats) {
  if (system.empty()) throw PreconditionError("solve_general: empty system");
  SolveStats local;
  std::vector<Node> nodes;
  nodes.reserve(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    nodes.push_back({CrtSolution{system[i].residue(), system[i].modulus()}, i, i});
  }

  if (options.pairing == Pairing::LeftFold) {
    Node acc = nodes.front();
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      acc = merge_nodes(system, acc, nodes[i], options.strategy);
      ++local.rounds;
      ++local.merges;
    }
    if (stats) *stats = local;
    return std::move(acc.solution);
  }

  while (nodes.size() > 1) {
    std::vector<Node> next;
    next.reserve((nodes.size() + 1) / 2);
    if (options.parallel) {
      std::vector<std::future<Node>> pending;
      for (std::size_t i = 0; i + 1 < nodes.size(); i += 2) {
        pending.push_back(std::async(std::launch::async, [&, i] {
          return merge_nodes(system, nodes[i], nodes[i + 1], options.strategy);
        }));
      }
      // Collected in tree order so the first failing pair is reported.
      for (auto& f : pending) next.push_back(f.get());
    } else {
      for (std::size_t i = 0; i + 1 < nodes.size(); i += 2) {
        next.push_back(merge_nodes(system, nodes[i], nodes[i + 1], options.strategy));
      }
    }
    local.merges += nodes.size() / 2;
    if (nodes.size() % 2 == 1) next.push_back(std::move(nodes.back()));
    nodes = std::move(next);
    ++local.rounds;
  }
  if (stats) *stats = local;
  return std::move(nodes.front().solution);
}

}  // namespace modinv
