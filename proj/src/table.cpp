#include "gran/table.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gran/errors.hpp"

namespace gran {

namespace {

struct Line {
  std::string text;
  std::size_t number;
};

std::vector<Line> split_lines(std::istream &in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r')
      text.pop_back();
    lines.push_back({text, number});
  }
  while (!lines.empty() && lines.back().text.empty())
    lines.pop_back();
  return lines;
}

struct Field {
  std::string text;
  std::size_t column; // 1-based character column of the field start
};

std::vector<Field> split_fields(const std::string &line) {
  std::vector<Field> fields;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back({line.substr(start), start + 1});
      return fields;
    }
    fields.push_back({line.substr(start, comma - start), start + 1});
    start = comma + 1;
  }
}

void check_document(const TableDocument &doc) {
  if (doc.rows.empty())
    throw EmptyTableError();
  std::set<std::string> objects;
  for (const auto &row : doc.rows)
    if (!objects.insert(row.object).second)
      throw DuplicateObjectError(row.object);
}

} // namespace

TableDocument parse_csv(std::istream &in) {
  auto lines = split_lines(in);
  if (lines.empty())
    throw EmptyTableError();

  TableDocument doc;
  auto header = split_fields(lines.front().text);
  std::set<std::string> names;
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i].text.empty())
      throw ParseError("empty attribute name", lines.front().number, header[i].column);
    if (!names.insert(header[i].text).second)
      throw ParseError("duplicate attribute '" + header[i].text + "'", lines.front().number,
                       header[i].column);
    doc.header.push_back(header[i].text);
  }

  std::set<std::string> objects;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto &line = lines[l];
    auto fields = split_fields(line.text);
    if (fields.size() < header.size())
      throw ParseError("expected " + std::to_string(header.size()) + " fields, found " +
                           std::to_string(fields.size()),
                       line.number, line.text.size() + 1);
    if (fields.size() > header.size())
      throw ParseError("expected " + std::to_string(header.size()) + " fields, found " +
                           std::to_string(fields.size()),
                       line.number, fields[header.size()].column - 1);
    if (fields[0].text.empty())
      throw ParseError("empty object name", line.number, 1);
    if (!objects.insert(fields[0].text).second)
      throw DuplicateObjectError(fields[0].text);
    TableDocument::Row row{fields[0].text, {}};
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (fields[i].text == kMissingMarker)
        row.values.emplace_back(std::nullopt);
      else
        row.values.emplace_back(fields[i].text);
    }
    doc.rows.push_back(std::move(row));
  }
  check_document(doc);
  return doc;
}

TableDocument parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_csv(in);
}

TableDocument parse_table_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    // nlohmann reports a byte offset; map it back to line and column.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(e.what(), line, column);
  }
  TableDocument doc;
  try {
    const std::string missing = j.value("missing", std::string(kMissingMarker));
    for (const auto &h : j.at("header"))
      doc.header.push_back(h.get<std::string>());
    for (const auto &r : j.at("rows")) {
      TableDocument::Row row{r.at("object").get<std::string>(), {}};
      const auto &values = r.at("values");
      if (values.size() != doc.header.size())
        throw ParseError("row '" + row.object + "' has " + std::to_string(values.size()) +
                             " values, expected " + std::to_string(doc.header.size()),
                         doc.rows.size() + 1, 0);
      for (const auto &v : values) {
        if (v.is_null() || (v.is_string() && v.get<std::string>() == missing))
          row.values.emplace_back(std::nullopt);
        else if (v.is_string())
          row.values.emplace_back(v.get<std::string>());
        else
          row.values.emplace_back(v.dump());
      }
      doc.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(e.what(), 0, 0);
  }
  std::set<std::string> names(doc.header.begin(), doc.header.end());
  if (names.size() != doc.header.size())
    throw ParseError("duplicate attribute name", 0, 0);
  check_document(doc);
  return doc;
}

InformationSystem to_information_system(const TableDocument &doc) {
  check_document(doc);
  std::vector<std::string> objects;
  for (const auto &row : doc.rows)
    objects.push_back(row.object);
  auto universe = Universe::make(std::move(objects));

  std::vector<Attribute> attributes;
  for (std::size_t col = 0; col < doc.header.size(); ++col) {
    std::map<std::string, std::size_t> block_of_value;
    std::vector<ElementSet> blocks;
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
      const auto &value = doc.rows[i].values.at(col);
      if (!value)
        continue;
      auto [it, fresh] = block_of_value.emplace(*value, blocks.size());
      if (fresh)
        blocks.emplace_back();
      blocks[it->second].insert(i);
    }
    attributes.push_back({doc.header[col], Granule(universe, std::move(blocks))});
  }
  return InformationSystem(universe, std::move(attributes));
}

InformationSystem ingest(const std::filesystem::path &path, std::optional<TableFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!format)
    format = path.extension() == ".json" ? TableFormat::json : TableFormat::csv;
  return to_information_system(*format == TableFormat::json ? parse_table_json(buffer.str())
                                                            : parse_csv(buffer.str()));
}

TableDocument to_table(const InformationSystem &sys) {
  TableDocument doc;
  const auto &u = *sys.universe();
  for (const auto &attr : sys.attributes())
    doc.header.push_back(attr.name);
  for (std::size_t i = 0; i < u.size(); ++i) {
    TableDocument::Row row{u.name(i), {}};
    for (const auto &attr : sys.attributes()) {
      auto block = attr.granule.block_of(i);
      if (block == Granule::npos)
        row.values.emplace_back(std::nullopt);
      else
        row.values.emplace_back("v" + std::to_string(block + 1));
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

std::string write_csv(const TableDocument &doc) {
  auto check = [](const std::string &cell) {
    if (cell.find_first_of(",\r\n") != std::string::npos)
      throw Error("cell '" + cell + "' cannot be written without quoting");
    return cell;
  };
  std::string out = "object";
  for (const auto &h : doc.header)
    out += "," + check(h);
  out += '\n';
  for (const auto &row : doc.rows) {
    out += check(row.object);
    for (const auto &v : row.values)
      out += "," + (v ? check(*v) : std::string(kMissingMarker));
    out += '\n';
  }
  return out;
}

} // namespace gran
