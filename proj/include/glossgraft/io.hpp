#pragma once

// File formats: dictionary entries (TSV or JSON lines) and prediction TSV.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "glossgraft/engine.hpp"
#include "glossgraft/variants.hpp"

namespace glossgraft {

// TSV columns: id, lemma, pos, gloss. Everything after the third tab is the
// gloss. Blank lines and lines starting with '#' are skipped.
std::vector<OtherDictEntry> parse_entries_tsv(std::istream& in);
// One JSON object per line with string fields id, lemma, pos, gloss.
std::vector<OtherDictEntry> parse_entries_jsonl(std::istream& in);
// Picks JSON lines for *.jsonl / *.json or when the first non-blank
// character is '{', TSV otherwise.
std::vector<OtherDictEntry> read_entries(const std::filesystem::path& path);

// "entry_id <TAB> synset_id <TAB> operation <TAB> score <TAB> provenance"
void write_predictions(std::ostream& out, std::span<const Attachment> attachments);
std::vector<Attachment> parse_predictions(std::istream& in);
std::vector<Attachment> read_predictions(const std::filesystem::path& path);

}  // namespace glossgraft
