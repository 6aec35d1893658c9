// Converts an NSP regex stoplist (/^word$/ per line) to one word per line.

#include <cstdio>

#include "glossgraft/glossgraft.h"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s NSP_STOPLIST OUTPUT\n", argv[0]);
    return 2;
  }
  size_t words = 0, skipped = 0;
  gg_status status = gg_stoplist_convert_nsp(argv[1], argv[2], &words, &skipped);
  if (status != GG_OK) {
    std::fprintf(stderr, "stoplist_convert: %s: %s\n", gg_status_name(status), gg_last_error());
    return 1;
  }
  std::fprintf(stderr, "stoplist_convert: %zu words written, %zu patterns skipped\n", words,
               skipped);
  return 0;
}
