#include "cli/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace bootperc::cli {

namespace {

using nlohmann::json;

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalars(const json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const json& e) { return !e.is_structured(); });
}

std::string inline_array(const json& arr) {
  std::string out = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += arr[i].is_array() ? inline_array(arr[i]) : scalar(arr[i]);
  }
  return out + "]";
}

void rows(std::ostringstream& out, const json& arr, const std::string& indent) {
  std::vector<std::string> columns;
  for (const auto& row : arr) {
    if (!row.is_object()) continue;
    for (const auto& [key, value] : row.items()) {
      if (value.is_structured()) continue;
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    width[c] = columns[c].size();
    for (const auto& row : arr) {
      if (row.contains(columns[c])) width[c] = std::max(width[c], scalar(row[columns[c]]).size());
    }
  }
  auto line = [&](auto cell) {
    out << indent;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      std::string text = cell(c);
      out << text;
      if (c + 1 < columns.size()) out << std::string(width[c] - text.size() + 2, ' ');
    }
    out << '\n';
  };
  line([&](std::size_t c) { return columns[c]; });
  for (const auto& row : arr) {
    line([&](std::size_t c) { return row.contains(columns[c]) ? scalar(row[columns[c]]) : std::string("-"); });
  }
}

void object(std::ostringstream& out, const json& doc, const std::string& indent) {
  std::size_t key_width = 0;
  for (const auto& [key, value] : doc.items()) key_width = std::max(key_width, key.size());
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      object(out, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && !all_scalars(value) && value.front().is_object()) {
      out << indent << key << ":\n";
      rows(out, value, indent + "  ");
    } else if (value.is_array()) {
      out << indent << key << std::string(key_width - key.size() + 2, ' ') << inline_array(value) << '\n';
    } else {
      out << indent << key << std::string(key_width - key.size() + 2, ' ') << scalar(value) << '\n';
    }
  }
}

}  // namespace

std::string render_table(const json& doc) {
  std::ostringstream out;
  if (doc.is_object()) {
    object(out, doc, "");
  } else if (doc.is_array()) {
    rows(out, doc, "");
  } else {
    out << scalar(doc) << '\n';
  }
  return out.str();
}

}  // namespace bootperc::cli
