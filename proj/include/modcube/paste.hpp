#pragma once

// Bounded equality checking of 2-cell terms modulo the (co)monad laws, the
// defining diagrams of single generator laws, and interchange of layers
// acting on disjoint segments.

#include <string>
#include <vector>

#include "modcube/dlaw.hpp"
#include "modcube/term.hpp"

namespace modcube {

/// One equation lhs = rhs between terms with equal source and target.
struct Diagram {
  std::string name;
  TwoCellTerm lhs;
  TwoCellTerm rhs;
};

/// The defining diagrams of a law with sides `moving`/`fixed` realized by
/// `t`: compatibility with the counit and comultiplication of every box
/// operator and with the unit and multiplication of every dia operator, at
/// each position of either side.
std::vector<Diagram> law_diagrams(const OneCellChain& moving,
                                  const OneCellChain& fixed,
                                  const TwoCellTerm& t);

/// Rewrite rules relevant to a set of letters and generator laws.
std::vector<Diagram> rules_for(const std::vector<Letter>& letters,
                               const std::vector<Generator>& laws);

/// An elementary rewrite. `rule` is either "interchange" or a rule name;
/// `forward` applies lhs -> rhs. `index` is the first affected layer and
/// `offset` the chain offset of the rule window.
struct Step {
  std::string rule;
  std::size_t index = 0;
  std::size_t offset = 0;
  bool forward = true;
};

/// Applies one step; throws ChainMismatch if it does not match.
TwoCellTerm apply_step(const TwoCellTerm& t, const Step& step,
                       const std::vector<Diagram>& rules);

struct Verdict {
  bool equal = false;
  std::vector<Step> path;  // replayable from lhs to rhs when equal
  std::size_t rule_steps = 0;
  std::size_t explored = 0;
};

/// Bidirectional breadth-first search; `bound` caps non-interchange steps.
/// Throws ChainMismatch if the endpoints do not share source and target.
Verdict check_equal(const TwoCellTerm& t1, const TwoCellTerm& t2,
                    std::size_t bound);

/// As above with an explicit rulebook.
Verdict check_equal(const TwoCellTerm& t1, const TwoCellTerm& t2,
                    std::size_t bound, const std::vector<Diagram>& rules);

/// Replays `path` from `from`; true iff it ends exactly at `to`.
bool replay(const TwoCellTerm& from, const std::vector<Step>& path,
            const TwoCellTerm& to, const std::vector<Diagram>& rules);

struct DiagramResult {
  std::string name;
  Diagram diagram;
  Verdict verdict;
};

struct Report {
  LawKind kind;
  std::vector<DiagramResult> diagrams;
  bool all_equal() const;
};

/// Checks every defining diagram of `kind` for `t` read as a law
/// moving -> fixed. Throws ShapeMismatch when t is not moving;fixed ->
/// fixed;moving or the operator types disagree with `kind`.
Report verify_law(const TwoCellTerm& t, const OneCellChain& moving,
                  const OneCellChain& fixed, LawKind kind, std::size_t bound);
Report verify_law(const LawComposite& c, std::size_t bound);

/// Letters and law generators occurring in a term.
void collect_alphabet(const TwoCellTerm& t, std::vector<Letter>& letters,
                      std::vector<Generator>& laws);

}  // namespace modcube
