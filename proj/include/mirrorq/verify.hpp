#pragma once

#include <mpfr.h>

#include <array>
#include <string>
#include <vector>

#include "mirrorq/rational.hpp"
#include "mirrorq/report.hpp"

namespace mirrorq {

struct VerifyConfig {
    int order = 30;
    mpfr_prec_t prec = 256;
    Rational z0 = Rational(1, 10);
    int samples = 100;        // random samples in the exact group suites
    int pf_order = 200;       // series order for the annihilation suite
    unsigned int seed = 20240501;
};

// Suite names are part of the CLI contract:
// table, dual-route, lovely1, moduli-relations, picard-fuchs, monodromy,
// group, cocycle, quadratic-relations, yukawa.
std::vector<std::string> verify_suite_names();

CheckReport run_suite(const std::string& name, const VerifyConfig& cfg);

CheckReport suite_table(const VerifyConfig&);
CheckReport suite_dual_route(const VerifyConfig&);
CheckReport suite_lovely1(const VerifyConfig&);
CheckReport suite_moduli_relations(const VerifyConfig&);
CheckReport suite_picard_fuchs(const VerifyConfig&);
CheckReport suite_monodromy(const VerifyConfig&);
CheckReport suite_group(const VerifyConfig&);
CheckReport suite_cocycle(const VerifyConfig&);
CheckReport suite_quadratic_relations(const VerifyConfig&);
CheckReport suite_yukawa(const VerifyConfig&);

// Row scalings that make every table entry integral past q^0, h0..h9.
struct TableScaling {
    const char* label;
    Rational factor;
};
const std::array<TableScaling, 10>& table_row_scalings();

// The 70 frozen scaled reference entries (rows h0..h9, columns q^0..q^6).
const std::array<std::array<const char*, 7>, 10>& reference_table_entries();

}  // namespace mirrorq
