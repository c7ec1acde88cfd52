#pragma once

#include <filesystem>
#include <string>

#include "arrayldpc/io.hpp"

namespace testutil {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(ARRAYLDPC_DATA_DIR) / name;
}

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(ARRAYLDPC_TEST_DIR) / "fixtures" / name;
}

inline arrayldpc::SupportMatrix load_data(const std::string& name) {
  return arrayldpc::io::read_support(data_path(name));
}

inline arrayldpc::SupportMatrix load_fixture(const std::string& name) {
  return arrayldpc::io::read_support(fixture_path(name));
}

inline arrayldpc::TemplateSupportMatrix load_template(const std::string& name) {
  return arrayldpc::io::read_template(data_path(name));
}

inline arrayldpc::SupportMatrix m6_q47() { return load_data("m6_q47_weight20.json"); }
inline arrayldpc::SupportMatrix m6_q59() { return load_data("m6_q59_weight20.json"); }
inline arrayldpc::SupportMatrix m7_q23() { return load_data("m7_q23_weight24.json"); }
inline arrayldpc::SupportMatrix m7_q29() { return load_data("m7_q29_weight24.json"); }
inline arrayldpc::TemplateSupportMatrix template_m6() { return load_template("template_m6_w20.json"); }
inline arrayldpc::TemplateSupportMatrix template_m7() { return load_template("template_m7_w24.json"); }

}  // namespace testutil
