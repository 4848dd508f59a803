#include "geocascade/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "geocascade/errors.hpp"

namespace geocascade {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& field, std::size_t row, const char* column) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.size() || field.empty()) {
    throw ConfigError("ensemble csv row " + std::to_string(row) + ": bad " + column + " value '" +
                      field + "'");
  }
  return value;
}

int parse_int(const std::string& field, std::size_t row, const char* column) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.size() || field.empty()) {
    throw ConfigError("ensemble csv row " + std::to_string(row) + ": bad " + column + " value '" +
                      field + "'");
  }
  return value;
}

}  // namespace

std::string format_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string format_sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  out << content;
  if (!out) throw ConfigError("write failed: " + path);
}

std::string points_csv(const SpatialGraph& graph) {
  std::string csv = "id,x,y\n";
  for (int i = 0; i < graph.node_count(); ++i) {
    csv += std::to_string(i);
    csv += ',';
    csv += format_fixed6(graph.points[static_cast<std::size_t>(i)].x);
    csv += ',';
    csv += format_fixed6(graph.points[static_cast<std::size_t>(i)].y);
    csv += '\n';
  }
  return csv;
}

void write_points_csv(const std::string& path, const SpatialGraph& graph) {
  write_text_file(path, points_csv(graph));
}

std::string ensemble_csv(const SpatialGraph& graph, const NodeEnsemble& ensemble) {
  std::string csv = "id,x,y,state,threshold,class,failed\n";
  for (int i = 0; i < graph.node_count(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    csv += std::to_string(i);
    csv += ',';
    csv += format_fixed6(graph.points[u].x);
    csv += ',';
    csv += format_fixed6(graph.points[u].y);
    csv += ',';
    csv += format_fixed6(ensemble.initial_state[u]);
    csv += ',';
    csv += format_fixed6(ensemble.threshold[u]);
    csv += ',';
    csv += class_code(ensemble.label[u]);
    csv += ',';
    csv += ensemble.failed[u] ? '1' : '0';
    csv += '\n';
  }
  return csv;
}

void write_ensemble_csv(const std::string& path, const SpatialGraph& graph,
                        const NodeEnsemble& ensemble) {
  write_text_file(path, ensemble_csv(graph, ensemble));
}

std::vector<NodeRow> read_ensemble_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open for reading: " + path);

  std::vector<NodeRow> rows;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (row == 1) {
      if (line != "id,x,y,state,threshold,class,failed") {
        throw ConfigError("ensemble csv row 1: unexpected header '" + line + "'");
      }
      continue;
    }
    if (line.empty()) continue;

    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 7) {
      throw ConfigError("ensemble csv row " + std::to_string(row) + ": expected 7 fields, got " +
                        std::to_string(f.size()));
    }
    NodeRow r;
    r.id = parse_int(f[0], row, "id");
    r.x = parse_double(f[1], row, "x");
    r.y = parse_double(f[2], row, "y");
    r.state = parse_double(f[3], row, "state");
    r.threshold = parse_double(f[4], row, "threshold");
    r.cls = f[5];
    if (r.cls != "HV" && r.cls != "HR" && r.cls != "W") {
      throw ConfigError("ensemble csv row " + std::to_string(row) + ": bad class value '" + r.cls +
                        "'");
    }
    if (f[6] == "0") {
      r.failed = false;
    } else if (f[6] == "1") {
      r.failed = true;
    } else {
      throw ConfigError("ensemble csv row " + std::to_string(row) + ": bad failed value '" + f[6] +
                        "'");
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace geocascade
