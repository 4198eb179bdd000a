#pragma once

#include <string>
#include <vector>

#include "knots/diagram.hpp"
#include "knots/hn.hpp"
#include "knots/moves.hpp"
#include "knots/unknotting.hpp"

namespace knots {

// The D_n experiment: the 2-component unlink presented as the closure of
//   s1^-1 (s2^-1 s1^-1)(s3^-1 s2^-1) ... (sn^-1 s[n-1]^-1) sn^n
// together with its explicit unknotting sequence, the smoothing census, and
// the crossing-smoothing lower-bound report.

struct DnCaps {
  int verify_n = 12;   // move verification (no fingerprints needed)
  int census_n = 7;    // fingerprint census
  int bracket_cap = 24;
};

Diagram dn_diagram(int n);

// Replayable on dn_diagram(n): n-1 staircase reductions (each some RIII
// moves and one positive RI deletion), then n matched RII deletions killing
// the remaining s1^-n s1^n word. Ends with 0 crossings and 2 free loops;
// tally is (n-1) RI-, n matched RII-, n(n-1)/2 RIII; length (n^2+3n-2)/2.
std::vector<MoveRecord> unknotting_sequence(int n);

struct CensusEntry {
  CrossingId crossing = 0;
  int sign = 0;
  CensusId predicted;    // from the braid position of the crossing's letter
  CensusId identified;   // from component count + fingerprint
  int smoothed_components = 0;
  UInterval u;           // table interval for the identified link
};

// Smooths every crossing of dn_diagram(n) and identifies the result against
// the reference family. Throws Error if any identification disagrees with
// the braid-position prediction (that would mean an engine bug).
std::vector<CensusEntry> dn_census(int n, bool assume_conjecture,
                                   const DnCaps& caps = {});

struct DnReport {
  int n = 0;
  bool assume_conjecture = false;
  // diagram shape
  int crossings = 0, positive = 0, negative = 0, writhe_value = 0, components = 0;
  // verified unknotting sequence
  std::size_t sequence_length = 0;
  MoveTally tally;
  std::vector<CensusEntry> census;
  // crossing-smoothing sums under the report's flag, in halves
  IuInterval iu_total;
  IuInterval iu_pp;            // the (+1,+1) variant
  IuInterval sigma_displayed;  // single-sum reading (no factor 2)
  IuInterval sigma_consistent; // doubled-staircase reading; equals iu_total
  // lower bounds on Reidemeister moves to undo the diagram (vs. the trivial
  // picture), certified from intervals and conjectural from exact values
  MoveBound bound_all_conjectural;
  MoveBound bound_all_certified;
  MoveBound split_conjectural;
  MoveBound split_certified;
};

// Assembles and cross-checks everything; any internal disagreement throws
// Error with a description of the mismatch.
DnReport dn_report(int n, bool assume_conjecture, const DnCaps& caps = {});

std::string report_table(const DnReport& r);
std::string report_json(const DnReport& r);  // serialized JSON object

}  // namespace knots
