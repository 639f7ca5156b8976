#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace schurpos {

// Deterministic command report: parameters, flat string records, verdict.
// Text rendering may restrict the table to the rows listed in text_rows
// (bulk scans show only offending rows there); JSON always carries every
// record. All rational values are serialized exactly, never as decimals.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<size_t> text_rows;  // indices into rows; empty with text_rows_all -> all
  bool text_rows_all = true;
  std::string text_override;  // when set, replaces the table in text mode
  bool pass = true;

  void add_parameter(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
  }

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  std::string verdict() const { return pass ? "pass" : "fail"; }

  std::string render_text() const {
    std::string out;
    if (!text_override.empty()) {
      out += text_override;
      if (out.back() != '\n') out += '\n';
      out += "\nverdict: " + verdict() + "\n";
      return out;
    }
    out += "command: " + command + "\n";
    for (const auto& [key, value] : parameters) out += key + ": " + value + "\n";
    if (!notes.empty()) {
      out += "\n";
      for (const auto& note : notes) out += note + "\n";
    }
    std::vector<size_t> shown;
    if (text_rows_all) {
      shown.resize(rows.size());
      for (size_t i = 0; i < rows.size(); ++i) shown[i] = i;
    } else {
      shown = text_rows;
    }
    if (!columns.empty() && !shown.empty()) {
      std::vector<size_t> width(columns.size());
      for (size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
      for (size_t i : shown) {
        for (size_t c = 0; c < columns.size() && c < rows[i].size(); ++c) {
          width[c] = std::max(width[c], rows[i][c].size());
        }
      }
      auto emit = [&](const std::vector<std::string>& cells) {
        for (size_t c = 0; c < columns.size(); ++c) {
          const std::string& cell = c < cells.size() ? cells[c] : std::string();
          out += cell;
          if (c + 1 < columns.size()) out += std::string(width[c] - cell.size() + 2, ' ');
        }
        out += '\n';
      };
      out += "\n";
      emit(columns);
      for (size_t i : shown) emit(rows[i]);
    }
    out += "\nverdict: " + verdict() + "\n";
    return out;
  }

  std::string render_json() const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : parameters) params[key] = value;
    doc["parameters"] = std::move(params);
    if (!notes.empty()) doc["notes"] = notes;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json record = nlohmann::ordered_json::object();
      for (size_t c = 0; c < columns.size() && c < row.size(); ++c) record[columns[c]] = row[c];
      records.push_back(std::move(record));
    }
    doc["records"] = std::move(records);
    doc["verdict"] = verdict();
    return doc.dump(2) + "\n";
  }
};

}  // namespace schurpos
