#pragma once

#include <optional>
#include <string>
#include <utility>

#include "spancat/span.hpp"

namespace spancat {

/// Outcome of one checker run: a verdict plus either a witness 2-cell or a
/// counterexample description.
struct AxiomReport {
  std::string subject;
  bool holds = false;
  std::optional<SpanMorphism> witness;
  std::optional<std::string> counterexample;
  bool bounded = false;  // true when the check swept a bounded enumeration

  static AxiomReport pass(std::string subject, SpanMorphism witness,
                          bool bounded = false) {
    AxiomReport r;
    r.subject = std::move(subject);
    r.holds = true;
    r.witness = std::move(witness);
    r.bounded = bounded;
    return r;
  }

  static AxiomReport fail(std::string subject, std::string counterexample,
                          bool bounded = false) {
    AxiomReport r;
    r.subject = std::move(subject);
    r.holds = false;
    r.counterexample = std::move(counterexample);
    r.bounded = bounded;
    return r;
  }
};

}  // namespace spancat
