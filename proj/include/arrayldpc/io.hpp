#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrayldpc/cyclegraph.hpp"
#include "arrayldpc/distance.hpp"
#include "arrayldpc/support.hpp"
#include "arrayldpc/template.hpp"
#include "arrayldpc/verify.hpp"

namespace arrayldpc::io {

using nlohmann::json;

json to_json(const SupportMatrix& sm);
SupportMatrix support_from_json(const json& j);

json to_json(const TemplateSupportMatrix& t);
TemplateSupportMatrix template_from_json(const json& j);

json to_json(const ColumnPermutation& pi);
json to_json(const Cycle& c);
json to_json(const DistanceResult& r);
json to_json(const VerificationReport& r);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

/// Support input as JSON or as one decimal column index per line; index
/// lists need q and m.
SupportMatrix read_support(const std::filesystem::path& path, std::optional<Int> q = std::nullopt,
                           std::optional<Int> m = std::nullopt);
SupportMatrix parse_support(const std::string& text, std::optional<Int> q = std::nullopt,
                            std::optional<Int> m = std::nullopt);

TemplateSupportMatrix read_template(const std::filesystem::path& path);

}  // namespace arrayldpc::io
