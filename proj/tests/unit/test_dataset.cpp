// Copyright 2026 The topicsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sstream>

#include "csv.hpp"
#include "temp_dir.hpp"
#include "topicsum/dataset.hpp"
#include "topicsum/error.hpp"
#include "topicsum/io.hpp"
#include "topicsum/utf8.hpp"

using namespace topicsum;

TEST_CASE("csv reader handles quoting, multiline fields and blank lines") {
  std::istringstream in("a,b,c\n\n\"x, y\",\"say \"\"hi\"\"\",\"line1\nline2\"\nplain,,end\n");
  CsvReader r(in);
  auto h = r.next();
  REQUIRE(h);
  CHECK(h->fields == std::vector<std::string>{"a", "b", "c"});
  auto row = r.next();
  REQUIRE(row);
  CHECK_FALSE(row->malformed);
  CHECK(row->fields == std::vector<std::string>{"x, y", "say \"hi\"", "line1\nline2"});
  CHECK(row->line == 3);
  row = r.next();
  REQUIRE(row);
  CHECK(row->fields == std::vector<std::string>{"plain", "", "end"});
  CHECK_FALSE(r.next());
}

TEST_CASE("csv reader flags malformed rows and resynchronizes") {
  std::istringstream in("a\"b,c\n\"ok\",d\n\"x\"junk,e\n\"open,f");
  CsvReader r(in);
  auto row = r.next();
  REQUIRE(row);
  CHECK(row->malformed);
  row = r.next();
  REQUIRE(row);
  CHECK_FALSE(row->malformed);
  CHECK(row->fields == std::vector<std::string>{"ok", "d"});
  row = r.next();
  REQUIRE(row);
  CHECK(row->malformed);
  row = r.next();
  REQUIRE(row);
  CHECK(row->malformed);
}

TEST_CASE("slugify_title") {
  CHECK(slugify_title("How to Comb Long Hair") == "comb_long_hair");
  CHECK(slugify_title("  Make a -- Paper Plane!! ") == "make_a_paper_plane");
  CHECK(slugify_title("How to") == "how_to");
  CHECK(slugify_title("???") == "article");
  CHECK(slugify_title(std::string(200, 'a')).size() == 80);
}

TEST_CASE("utf8 sanitize replaces invalid bytes") {
  bool repaired = false;
  CHECK(utf8::sanitize("caf\xc3\xa9", &repaired) == "caf\xc3\xa9");
  CHECK_FALSE(repaired);
  CHECK(utf8::sanitize("bad\xff!", &repaired) == "bad\xef\xbf\xbd!");
  CHECK(repaired);
  CHECK(utf8::is_valid("plain"));
  CHECK_FALSE(utf8::is_valid("\xc3"));
}

TEST_CASE("ingest reads valid rows, counts skips, and repairs encoding") {
  TempDir dir;
  write_file(dir / "c.csv",
             "title,headline,text,extra\n"
             "How to Fly,Flap hard.,Flap your arms. Then jump.,x\n"
             "How to Swim,,Kick your legs.,x\n"
             "How to Fly,Try again.,\"Flap \"\"harder\"\".\",x\n"
             "How to Sing,Open up.,Sing \xff loudly.,x\n"
             "short row\n");
  const IngestResult r = ingest_csv(dir / "c.csv");
  REQUIRE(r.pairs.size() == 3);
  CHECK(r.pairs[0].id == "fly");
  CHECK(r.pairs[0].reference_summary == "Flap hard.");
  CHECK(r.pairs[0].article == "Flap your arms. Then jump.");
  CHECK(r.pairs[1].id == "fly_2");
  CHECK(r.pairs[1].article == "Flap \"harder\".");
  CHECK(r.pairs[2].encoding_repaired);
  CHECK(utf8::is_valid(r.pairs[2].article));
  CHECK(r.manifest.record_count == 3);
  CHECK(r.manifest.skipped_count == 2);
  CHECK(r.manifest.repaired_count == 1);

  const auto limited = ingest_csv(dir / "c.csv", 1);
  CHECK(limited.pairs.size() == 1);
}

TEST_CASE("ingest errors") {
  TempDir dir;
  CHECK_THROWS_AS(ingest_csv(dir / "missing.csv"), IoError);
  write_file(dir / "empty.csv", "headline,title,text\n,,\n");
  CHECK_THROWS_AS(ingest_csv(dir / "empty.csv"), EmptyCorpusError);
  write_file(dir / "nohdr.csv", "a,b\n1,2\n");
  CHECK_THROWS_AS(ingest_csv(dir / "nohdr.csv"), DataError);
}

TEST_CASE("split round trip and manifest json") {
  TempDir dir;
  std::vector<ArticlePair> pairs = {{"one", "One", "Text one.", "Sum one.", false},
                                    {"two", "Two\tTabs", "Text two.\nLine.", "Sum two.", false}};
  write_split(pairs, dir / "split");
  const auto back = read_split(dir / "split");
  REQUIRE(back.size() == 2);
  CHECK(back[0] == pairs[0]);
  CHECK(back[1].article == pairs[1].article);
  CHECK(back[1].title == "Two Tabs");

  pairs.push_back({"../evil", "", "x", "y", false});
  CHECK_THROWS_AS(write_split(pairs, dir / "bad"), DataError);

  CorpusManifest m{10, 2, 1, "data.csv"};
  CHECK(CorpusManifest::from_json(m.to_json()) == m);
  CHECK_THROWS_AS(CorpusManifest::from_json("{"), DataError);
}
