#pragma once

#include <string>

#include <json.hpp>

#include "symfact/certify.hpp"
#include "symfact/pencil.hpp"
#include "symfact/symmetrizer.hpp"

namespace symfact {

using ordered_json = nlohmann::ordered_json;

/// Plain-text matrix format: header "rows cols", then one line per row with
/// 17-significant-digit decimals (round-trip exact for doubles).
std::string render_matrix(const DenseMatrix& a);
DenseMatrix parse_matrix(const std::string& text);

DenseMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const DenseMatrix& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

ordered_json spec_to_json(const SpectrumSpec& spec);
SpectrumSpec spec_from_json(const ordered_json& j);

ordered_json inertia_to_json(const Inertia& inertia);

ordered_json factorization_to_json(const SymFactorization& fact);
ordered_json certificate_to_json(const Certificate& cert);
ordered_json scan_to_json(const PencilScan& scan);
std::string scan_to_csv(const PencilScan& scan);
ordered_json census_to_json(const InertiaCensus& census, const SymmetrizerBasis& basis,
                            const CensusBoundsReport& report);

} // namespace symfact
