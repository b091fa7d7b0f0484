#include "record_io.hpp"

#include <cstdio>
#include <sstream>

namespace cqze::tools {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> columns = {
      "M",       "N",       "s",       "B",        "eta",      "bob_bit",
      "p_d1",    "p_d2",    "p_d3",    "p_bob",    "p_noise",  "se_p_d1",
      "se_p_d2", "se_p_d3", "se_p_bob", "se_p_noise", "mutual_information", "seed"};
  return columns;
}

namespace {

// Canonical double: what the emitted text parses back to.
double canon(double v) { return std::stod(format_value(v)); }

std::vector<std::string> cells(const RunRecord& r) {
  return {std::to_string(r.outer_cycles),
          std::to_string(r.inner_cycles),
          format_value(r.imperfection),
          format_value(r.noise_rate),
          format_value(r.eta),
          std::to_string(r.bob_bit),
          format_value(r.dist.d1),
          format_value(r.dist.d2),
          format_value(r.dist.d3),
          format_value(r.dist.bob),
          format_value(r.dist.noise),
          format_value(r.std_error.d1),
          format_value(r.std_error.d2),
          format_value(r.std_error.d3),
          format_value(r.std_error.bob),
          format_value(r.std_error.noise),
          format_value(r.mutual_information),
          std::to_string(r.seed)};
}

}  // namespace

std::string to_csv(std::span<const RunRecord> records) {
  std::ostringstream out;
  const auto& columns = record_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i];
  }
  out << '\n';
  for (const RunRecord& r : records) {
    const auto row = cells(r);
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json record_json(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["M"] = r.outer_cycles;
  j["N"] = r.inner_cycles;
  j["s"] = canon(r.imperfection);
  j["B"] = canon(r.noise_rate);
  j["eta"] = canon(r.eta);
  j["bob_bit"] = r.bob_bit;
  j["p_d1"] = canon(r.dist.d1);
  j["p_d2"] = canon(r.dist.d2);
  j["p_d3"] = canon(r.dist.d3);
  j["p_bob"] = canon(r.dist.bob);
  j["p_noise"] = canon(r.dist.noise);
  j["se_p_d1"] = canon(r.std_error.d1);
  j["se_p_d2"] = canon(r.std_error.d2);
  j["se_p_d3"] = canon(r.std_error.d3);
  j["se_p_bob"] = canon(r.std_error.bob);
  j["se_p_noise"] = canon(r.std_error.noise);
  j["mutual_information"] = canon(r.mutual_information);
  j["seed"] = r.seed;
  return j;
}

std::string to_json(std::span<const RunRecord> records) {
  if (records.size() == 1) {
    return record_json(records.front()).dump(2) + "\n";
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RunRecord& r : records) arr.push_back(record_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace cqze::tools
