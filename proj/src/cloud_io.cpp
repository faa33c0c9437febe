#include "cricci/cloud_io.hpp"

#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "cricci/numerics.hpp"

namespace cricci {

namespace {

std::string strip_csv_suffix(const std::string& path) {
  constexpr std::string_view suffix = ".csv";
  if (path.size() > suffix.size() &&
      path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0)
    return path.substr(0, path.size() - suffix.size());
  return path;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string expected_header(std::size_t dim, bool has_weights, bool has_rho) {
  std::string h;
  for (std::size_t k = 0; k < dim; ++k) {
    if (k) h += ',';
    h += "x" + std::to_string(k);
  }
  if (has_weights) h += ",weight";
  if (has_rho) h += ",rho";
  return h;
}

}  // namespace

PointCloud load_cloud(const std::string& path_base) {
  const std::string base = strip_csv_suffix(path_base);
  const std::string csv_path = base + ".csv";
  const std::string manifest_path = base + ".manifest.json";

  std::ifstream manifest_in(manifest_path);
  if (!manifest_in)
    throw io_error("cannot open manifest: " + manifest_path);
  nlohmann::ordered_json manifest;
  try {
    manifest_in >> manifest;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("manifest " + manifest_path + ": " + e.what());
  }

  std::size_t n = 0, dim = 0;
  bool has_weights = false, has_rho = false;
  nlohmann::ordered_json provenance = nullptr;
  try {
    n = manifest.at("n").get<std::size_t>();
    dim = manifest.at("ambient_dim").get<std::size_t>();
    has_weights = manifest.at("has_weights").get<bool>();
    has_rho = manifest.at("has_rho").get<bool>();
    if (manifest.contains("provenance")) provenance = manifest.at("provenance");
  } catch (const nlohmann::json::exception& e) {
    throw schema_error("manifest " + manifest_path + ": " + e.what());
  }
  if (dim == 0) throw schema_error("manifest: ambient_dim must be positive");

  std::ifstream csv_in(csv_path);
  if (!csv_in) throw io_error("cannot open cloud CSV: " + csv_path);

  std::string line;
  if (!std::getline(csv_in, line)) throw schema_error("cloud CSV: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::string want = expected_header(dim, has_weights, has_rho);
  if (line != want)
    throw schema_error("cloud CSV header mismatch: expected '" + want +
                       "', got '" + line + "'");

  const std::size_t columns = dim + (has_weights ? 1 : 0) + (has_rho ? 1 : 0);
  std::vector<double> coords;
  coords.reserve(n * dim);
  std::vector<double> weights;
  std::optional<std::vector<double>> rho;
  if (has_weights) weights.reserve(n);
  if (has_rho) rho.emplace();

  std::size_t row = 0;
  while (std::getline(csv_in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    const auto fields = split_csv_line(line);
    if (fields.size() != columns)
      throw parse_error("cloud CSV row " + std::to_string(row) + ": expected " +
                        std::to_string(columns) + " fields, got " +
                        std::to_string(fields.size()));
    for (std::size_t c = 0; c < columns; ++c) {
      double v;
      if (!parse_double(fields[c], v))
        throw parse_error("cloud CSV row " + std::to_string(row) +
                          ": malformed number '" + std::string(fields[c]) + "'");
      if (c < dim) {
        coords.push_back(v);
      } else if (has_weights && c == dim) {
        weights.push_back(v);
      } else {
        rho->push_back(v);
      }
    }
  }
  if (row != n)
    throw schema_error("cloud CSV: manifest declares n=" + std::to_string(n) +
                       " but file has " + std::to_string(row) + " rows");

  // PointCloud applies the default uniform weights when none were stored
  // and rejects an all-zero weight column as a degenerate measure.
  return PointCloud(dim, std::move(coords), std::move(weights), std::move(rho),
                    std::move(provenance));
}

void save_cloud(const PointCloud& cloud, const std::string& path_base) {
  const std::string base = strip_csv_suffix(path_base);
  const std::string csv_path = base + ".csv";
  const std::string manifest_path = base + ".manifest.json";
  const bool has_rho = cloud.density_log().has_value();

  std::ofstream csv_out(csv_path, std::ios::trunc);
  if (!csv_out) throw io_error("cannot write cloud CSV: " + csv_path);
  csv_out << expected_header(cloud.ambient_dim(), true, has_rho) << '\n';
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) csv_out << ',';
      csv_out << fmt_g17(p[k]);
    }
    csv_out << ',' << fmt_g17(cloud.weight(i));
    if (has_rho) csv_out << ',' << fmt_g17((*cloud.density_log())[i]);
    csv_out << '\n';
  }
  if (!csv_out.flush()) throw io_error("write failed: " + csv_path);

  nlohmann::ordered_json manifest;
  manifest["n"] = cloud.size();
  manifest["ambient_dim"] = cloud.ambient_dim();
  manifest["has_weights"] = true;
  manifest["has_rho"] = has_rho;
  manifest["provenance"] = cloud.provenance();

  std::ofstream manifest_out(manifest_path, std::ios::trunc);
  if (!manifest_out) throw io_error("cannot write manifest: " + manifest_path);
  manifest_out << manifest.dump(2) << '\n';
  if (!manifest_out.flush()) throw io_error("write failed: " + manifest_path);
}

}  // namespace cricci
