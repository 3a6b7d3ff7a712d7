#pragma once

#include "ttk/io.hpp"

namespace ttk {

struct FamilyRow {
    int param = 0;
    Interval alpha;
    Interval period_log;
    Interval sup_min;
    std::map<std::string, Rational> extra;  // family-specific diagnostics
};

std::vector<FamilyRow> zeta_family(const Bundle& b, int k0, int k1, int grid_steps);
std::vector<FamilyRow> twist_family(const Bundle& b, int u0, int u1, int grid_steps);
std::vector<std::string> family_csv_fields(const FamilyRow& r);
std::string family_csv(const std::vector<FamilyRow>& rows);

}  // namespace ttk
