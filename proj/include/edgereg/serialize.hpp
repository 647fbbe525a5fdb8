#pragma once

#include <string>

#include "edgereg/characterizations.hpp"
#include "edgereg/even_connection.hpp"
#include <json.hpp>

namespace edgereg {

using Json = nlohmann::ordered_json;

/// Exponent vector of length `vars`.
Json monomial_json(const Monomial& m, int vars);
Json ideal_json(const MonomialIdeal& ideal, int vars);

/// {"convention","field","entries":[{"i","j","beta"}]}, entries in (i, j) order.
Json betti_table_json(const BettiTable& t);
/// One row per homological index i, one column per degree j.
std::string betti_table_csv(const BettiTable& t);
/// Rows j - i, columns i, with "-" for zero entries.
std::string betti_table_text(const BettiTable& t);

Json witness_json(const EvenConnectionWitness& w);
Json discrepancy_json(const ColonGeneratorCheck& c, int vars);
Json cycle_json(const CycleWitness& c);
Json reg_class_json(const RegClass& c);

/// One JSON line per report. Timings are included only on request.
Json report_json(const VerificationReport& r, bool with_timings);
std::string summary_csv_header();
/// graph6,n,class,reg sequence (';'-joined),pass
std::string summary_csv_row(const VerificationReport& r);

}  // namespace edgereg
