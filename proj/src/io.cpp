#include "glossgraft/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "glossgraft/error.hpp"
#include "text_util.hpp"

namespace glossgraft {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

bool skippable(std::string_view line) {
  auto t = detail::trim(line);
  return t.empty() || t.front() == '#';
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

PartOfSpeech entry_pos(std::string_view text, std::size_t line_no) {
  try {
    return parse_pos(text);
  } catch (const Error& e) {
    parse_fail(line_no, e.what());
  }
}

}  // namespace

std::vector<OtherDictEntry> parse_entries_tsv(std::istream& in) {
  std::vector<OtherDictEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(std::move(line));
    if (skippable(line)) continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    auto t3 = t2 == std::string::npos ? t2 : line.find('\t', t2 + 1);
    if (t3 == std::string::npos) parse_fail(line_no, "expected 4 tab-separated columns");
    OtherDictEntry e;
    e.id = std::string(detail::trim(std::string_view(line).substr(0, t1)));
    e.lemma = std::string(detail::trim(std::string_view(line).substr(t1 + 1, t2 - t1 - 1)));
    e.pos = entry_pos(std::string_view(line).substr(t2 + 1, t3 - t2 - 1), line_no);
    e.gloss = std::string(detail::trim(std::string_view(line).substr(t3 + 1)));
    if (e.id.empty()) parse_fail(line_no, "empty entry id");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<OtherDictEntry> parse_entries_jsonl(std::istream& in) {
  std::vector<OtherDictEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      parse_fail(line_no, e.what());
    }
    auto field = [&](const char* name) {
      if (!j.is_object() || !j.contains(name) || !j[name].is_string())
        parse_fail(line_no, std::string("missing string field '") + name + "'");
      return j[name].get<std::string>();
    };
    OtherDictEntry e;
    e.id = field("id");
    e.lemma = field("lemma");
    e.pos = entry_pos(field("pos"), line_no);
    e.gloss = field("gloss");
    if (e.id.empty()) parse_fail(line_no, "empty entry id");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<OtherDictEntry> read_entries(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open entries file " + path.string());
  auto ext = path.extension().string();
  bool json = ext == ".jsonl" || ext == ".json";
  if (!json) {
    char c;
    while (in.get(c)) {
      if (!detail::is_space(c)) {
        json = c == '{';
        break;
      }
    }
    in.clear();
    in.seekg(0);
  }
  try {
    return json ? parse_entries_jsonl(in) : parse_entries_tsv(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_predictions(std::ostream& out, std::span<const Attachment> attachments) {
  for (const auto& a : attachments) {
    out << a.entry_id << '\t' << a.target.str() << '\t' << operation_name(a.operation) << '\t'
        << a.score << '\t' << provenance_name(a.provenance) << '\n';
  }
}

std::vector<Attachment> parse_predictions(std::istream& in) {
  std::vector<Attachment> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(std::move(line));
    if (skippable(line)) continue;
    auto cols = detail::split_char(line, '\t');
    if (cols.size() != 5) parse_fail(line_no, "expected 5 tab-separated columns");
    try {
      Attachment a;
      a.entry_id = std::string(detail::trim(cols[0]));
      a.target = SynsetId::parse(cols[1]);
      a.operation = parse_operation(cols[2]);
      auto s = detail::parse_number<std::uint64_t>(detail::trim(cols[3]));
      if (!s) parse_fail(line_no, "invalid score");
      a.score = *s;
      a.provenance = parse_provenance(cols[4]);
      out.push_back(std::move(a));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      parse_fail(line_no, e.what());
    }
  }
  return out;
}

std::vector<Attachment> read_predictions(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open predictions file " + path.string());
  try {
    return parse_predictions(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace glossgraft
