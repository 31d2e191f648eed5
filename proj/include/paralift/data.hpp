#pragma once

#include <string>

#include "paralift/bianchi.hpp"
#include "paralift/curves.hpp"
#include "paralift/error.hpp"
#include "paralift/fs.hpp"

namespace paralift::data {

PARALIFT_ERROR(UnknownAsset);

// Raw text of a bundled asset: f223, C, Cprime, sextic, table1. When the
// PARALIFT_DATA_DIR environment variable (or an explicit data_dir) names a
// directory, the asset's file there shadows the embedded copy.
std::string asset_text(const std::string& name, const std::string& data_dir = "");

// Resolve "builtin:NAME" through asset_text, anything else as a file path.
std::string load_text(const std::string& ref, const std::string& data_dir = "");

bianchi::BianchiNewform bundled_newform(const std::string& data_dir = "");
curves::CurveK bundled_curve_K(const std::string& data_dir = "");
curves::CurveQ bundled_curve_Q(const std::string& data_dir = "");
fs::SexticField bundled_sextic(const std::string& data_dir = "");

} // namespace paralift::data
