// Copyright 2026 The Nameblind Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nameblind/anonymizer.hpp"

#include <gtest/gtest.h>

#include <regex>

#include "testutil.hpp"

namespace nameblind {
namespace {

constexpr const char* kBubbleSortPython =
    "def bubble_sort(begin, end, pred):\n"
    "    if ops.distance(begin, end) <= 1:\n"
    "        return\n"
    "    it_end = end\n"
    "    finished = False\n"
    "    while not finished:\n"
    "        finished = True\n"
    "        ops.advance(it_end, -1)\n"
    "        it = begin\n"
    "        while it != it_end:\n"
    "            next = detail.advance(it, 1)\n"
    "            if pred(next, it):\n"
    "                ops.swap(it, next)\n"
    "                finished = False\n"
    "            it = detail.advance(it, 1)\n";

RenameMap map_for(std::string_view source, SourceLanguage language,
                  CategorySet categories, Strategy strategy,
                  NamingScheme scheme, std::uint64_t seed,
                  const NamePool* pool = nullptr) {
  NameInventory inventory = classify_names(tokenize(source, language));
  return build_rename_map(inventory, language, categories, strategy, scheme,
                          seed, pool);
}

TEST(RenameMapBuilder, SequentialReproducesListingMapping) {
  RenameMap map = map_for(kBubbleSortPython, SourceLanguage::kPython,
                          CategorySet::all(), Strategy::kRandomGenerated,
                          NamingScheme::kSequential, 0);
  std::map<std::pair<NameCategory, std::string>, std::string> expected = {
      {{NameCategory::kVariable, "begin"}, "var1"},
      {{NameCategory::kVariable, "end"}, "var2"},
      {{NameCategory::kVariable, "it_end"}, "var3"},
      {{NameCategory::kVariable, "finished"}, "var4"},
      {{NameCategory::kVariable, "it"}, "var5"},
      {{NameCategory::kVariable, "next"}, "var6"},
      {{NameCategory::kDefinition, "bubble_sort"}, "fun1"},
      {{NameCategory::kInvocation, "pred"}, "fun2"},
  };
  EXPECT_EQ(map.entries, expected);
}

TEST(RenameMapBuilder, EmptyCategorySetRejected) {
  NameInventory inventory =
      classify_names(tokenize("x = 1\n", SourceLanguage::kPython));
  EXPECT_THROW(build_rename_map(inventory, SourceLanguage::kPython, CategorySet{},
                                Strategy::kRandomGenerated,
                                NamingScheme::kSequential, 0),
               InvalidConfigError);
}

TEST(RenameMapBuilder, ShufflingRequiresPoolAndViceVersa) {
  NameInventory inventory =
      classify_names(tokenize("x = 1\n", SourceLanguage::kPython));
  EXPECT_THROW(build_rename_map(inventory, SourceLanguage::kPython,
                                CategorySet::all(), Strategy::kShuffling,
                                NamingScheme::kRandomString, 0, nullptr),
               InvalidConfigError);
  NamePool pool;
  EXPECT_THROW(build_rename_map(inventory, SourceLanguage::kPython,
                                CategorySet::all(), Strategy::kRandomGenerated,
                                NamingScheme::kRandomString, 0, &pool),
               InvalidConfigError);
}

TEST(RenameMapBuilder, NoDefinitionsYieldsEmptyMap) {
  RenameMap map = map_for("x = 1\ny = x\n", SourceLanguage::kPython,
                          CategorySet{false, true, false},
                          Strategy::kRandomGenerated,
                          NamingScheme::kSequential, 0);
  EXPECT_TRUE(map.entries.empty());
}

TEST(RenameMapBuilder, RandomStringShapeAndStability) {
  RenameMap first = map_for("x = 1\n", SourceLanguage::kPython,
                            CategorySet{true, false, false},
                            Strategy::kRandomGenerated,
                            NamingScheme::kRandomString, 0);
  RenameMap second = map_for("x = 1\n", SourceLanguage::kPython,
                             CategorySet{true, false, false},
                             Strategy::kRandomGenerated,
                             NamingScheme::kRandomString, 0);
  ASSERT_EQ(first.entries.size(), 1u);
  const std::string& replacement = first.entries.begin()->second;
  EXPECT_TRUE(std::regex_match(replacement,
                               std::regex("[a-z][a-z0-9]{15}")))
      << replacement;
  EXPECT_EQ(first.entries, second.entries);
}

TEST(RenameMapBuilder, SequentialSkipsNamesAlreadyInSnippet) {
  // var1 occurs only as an attribute root, so it stays and blocks the
  // candidate "var1".
  RenameMap map = map_for("def f(a):\n    return var1.x + a\n",
                          SourceLanguage::kPython,
                          CategorySet{true, false, false},
                          Strategy::kRandomGenerated,
                          NamingScheme::kSequential, 0);
  ASSERT_EQ(map.entries.size(), 1u);
  EXPECT_EQ(map.entries.begin()->first.second, "a");
  EXPECT_EQ(map.entries.begin()->second, "var2");
}

TEST(RenameMapBuilder, ReplacementsNeverCollideWithKeywordsOrBuiltins) {
  // Tiny name length forces many collision re-draws.
  RenameOptions options;
  options.random_name_length = 2;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::string source = testutil::gen_python_snippet(seed);
    NameInventory inventory =
        classify_names(tokenize(source, SourceLanguage::kPython));
    RenameMap map = build_rename_map(inventory, SourceLanguage::kPython,
                                     CategorySet::all(),
                                     Strategy::kRandomGenerated,
                                     NamingScheme::kRandomString, seed, nullptr,
                                     options);
    std::set<std::string> used;
    for (const auto& [key, replacement] : map.entries) {
      EXPECT_FALSE(is_keyword(replacement, SourceLanguage::kPython));
      EXPECT_FALSE(is_builtin_name(replacement, SourceLanguage::kPython));
      EXPECT_NE(replacement, key.second);
      EXPECT_TRUE(used.insert(replacement).second) << "duplicate " << replacement;
    }
  }
}

TEST(PoolExtraction, DefinitionPoolCollectsDistinctNames) {
  NamePool pool = extract_pool(
      {"def bubble_sort(a):\n    return a\n",
       "def aes_encryption(b):\n    return b\n"},
      SourceLanguage::kPython);
  std::vector<std::string> names =
      pool.sorted_names(SourceLanguage::kPython, NameCategory::kDefinition);
  EXPECT_EQ(names, (std::vector<std::string>{"aes_encryption", "bubble_sort"}));
}

TEST(PoolExtraction, NoCallsMeansEmptyInvocationPool) {
  NamePool pool =
      extract_pool({"x = 1\n", "y = 2\n"}, SourceLanguage::kPython);
  EXPECT_EQ(pool.distinct(SourceLanguage::kPython, NameCategory::kInvocation), 0u);
}

TEST(Shuffling, ReplacementComesFromPoolAndDiffersFromOriginal) {
  NamePool pool = extract_pool(
      {"def bubble_sort(a):\n    return a\n",
       "def aes_encryption(b):\n    return b\n"},
      SourceLanguage::kPython);
  RenameMap map = map_for("def bubble_sort(a):\n    return a\n",
                          SourceLanguage::kPython,
                          CategorySet{false, true, false}, Strategy::kShuffling,
                          NamingScheme::kRandomString, 3, &pool);
  ASSERT_EQ(map.entries.size(), 1u);
  EXPECT_EQ(map.entries.begin()->second, "aes_encryption");
}

TEST(Shuffling, SingletonPoolAllowsIdentity) {
  NamePool pool = extract_pool({"def only_one(a):\n    return a\n"},
                               SourceLanguage::kPython);
  RenameMap map = map_for("def only_one(x):\n    return x\n",
                          SourceLanguage::kPython,
                          CategorySet{false, true, false}, Strategy::kShuffling,
                          NamingScheme::kRandomString, 0, &pool);
  ASSERT_EQ(map.entries.size(), 1u);
  EXPECT_EQ(map.entries.begin()->second, "only_one");
}

TEST(Shuffling, PoolSmallerThanDemandExhausts) {
  NamePool pool = extract_pool({"lonely = 1\n"}, SourceLanguage::kPython);
  NameInventory inventory = classify_names(
      tokenize("a = 1\nb = a + 1\n", SourceLanguage::kPython));
  EXPECT_THROW(build_rename_map(inventory, SourceLanguage::kPython,
                                CategorySet{true, false, false},
                                Strategy::kShuffling,
                                NamingScheme::kRandomString, 0, &pool),
               PoolExhaustedError);
}

TEST(Shuffling, TwoNamePoolsSwapCleanly) {
  // Domain equals the pool; the only valid assignment is the swap.
  NamePool pool = extract_pool({"alpha_v = 1\nbeta_v = alpha_v\n"},
                               SourceLanguage::kPython);
  RenameMap map = map_for("alpha_v = 1\nbeta_v = alpha_v\n",
                          SourceLanguage::kPython,
                          CategorySet{true, false, false}, Strategy::kShuffling,
                          NamingScheme::kRandomString, 11, &pool);
  ASSERT_EQ(map.entries.size(), 2u);
  EXPECT_EQ(map.entries.at({NameCategory::kVariable, "alpha_v"}), "beta_v");
  EXPECT_EQ(map.entries.at({NameCategory::kVariable, "beta_v"}), "alpha_v");
}

TEST(GlobalPermutation, SameNameGetsSameReplacementAcrossSnippets) {
  std::vector<std::string> corpus = {
      "def f(shared_name):\n    local_a = shared_name\n    return local_a\n",
      "def g(shared_name):\n    local_b = shared_name\n    return local_b\n",
      "def h(other_x):\n    return other_x\n"};
  NamePool pool = extract_pool(corpus, SourceLanguage::kPython);
  GlobalPermutation permutation = GlobalPermutation::build(pool, 5);
  RenameOptions options;
  options.global_permutation = &permutation;

  std::vector<std::string> replacements;
  for (int i = 0; i < 2; ++i) {
    NameInventory inventory =
        classify_names(tokenize(corpus[i], SourceLanguage::kPython));
    RenameMap map = build_rename_map(
        inventory, SourceLanguage::kPython, CategorySet{true, false, false},
        Strategy::kShuffling, NamingScheme::kRandomString, 1000 + i, &pool,
        options);
    replacements.push_back(map.entries.at({NameCategory::kVariable,
                                           "shared_name"}));
  }
  EXPECT_EQ(replacements[0], replacements[1]);
  EXPECT_NE(replacements[0], "shared_name");
}

TEST(ApplyRenames, EmptyMapIsIdentity) {
  TokenStream stream = tokenize(kBubbleSortPython, SourceLanguage::kPython);
  NameInventory inventory = classify_names(stream);
  RenameMap map;
  EXPECT_EQ(detokenize(apply_renames(stream, map, inventory)),
            kBubbleSortPython);
}

TEST(ApplyRenames, ListingGoldenOutput) {
  constexpr const char* kExpected =
      "def fun1(var1, var2, fun2):\n"
      "    if ops.distance(var1, var2) <= 1:\n"
      "        return\n"
      "    var3 = var2\n"
      "    var4 = False\n"
      "    while not var4:\n"
      "        var4 = True\n"
      "        ops.advance(var3, -1)\n"
      "        var5 = var1\n"
      "        while var5 != var3:\n"
      "            var6 = detail.advance(var5, 1)\n"
      "            if fun2(var6, var5):\n"
      "                ops.swap(var5, var6)\n"
      "                var4 = False\n"
      "            var5 = detail.advance(var5, 1)\n";
  EXPECT_EQ(anonymize_snippet(kBubbleSortPython, SourceLanguage::kPython,
                              CategorySet::all(), Strategy::kRandomGenerated,
                              NamingScheme::kSequential, 0),
            kExpected);
}

TEST(ApplyRenames, CategoryIsolation) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::string source = testutil::gen_python_snippet(seed);
    TokenStream stream = tokenize(source, SourceLanguage::kPython);
    NameInventory inventory = classify_names(stream);
    RenameMap map = build_rename_map(
        inventory, SourceLanguage::kPython, CategorySet{true, false, false},
        Strategy::kRandomGenerated, NamingScheme::kRandomString, seed);
    TokenStream rewritten = apply_renames(stream, map, inventory);
    ASSERT_EQ(rewritten.tokens.size(), stream.tokens.size());
    for (const NameOccurrence& occ : inventory.occurrences) {
      if (occ.category != NameCategory::kVariable || occ.qualified) {
        EXPECT_EQ(rewritten.tokens[occ.token_index].text,
                  stream.tokens[occ.token_index].text);
      }
    }
  }
}

TEST(ApplyRenames, KindSequencePreservedAndRelexable) {
  for (std::uint64_t seed = 40; seed < 80; ++seed) {
    for (SourceLanguage language :
         {SourceLanguage::kPython, SourceLanguage::kJava}) {
      std::string source = testutil::gen_snippet(language, seed);
      TokenStream stream = tokenize(source, language);
      NameInventory inventory = classify_names(stream);
      RenameMap map =
          build_rename_map(inventory, language, CategorySet::all(),
                           Strategy::kRandomGenerated,
                           NamingScheme::kRandomString, seed);
      TokenStream rewritten = apply_renames(stream, map, inventory);
      ASSERT_EQ(rewritten.tokens.size(), stream.tokens.size());
      for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
        EXPECT_EQ(rewritten.tokens[i].kind, stream.tokens[i].kind);
      }
      TokenStream relexed = tokenize(rewritten.source, language);
      EXPECT_EQ(relexed.tokens, rewritten.tokens);
    }
  }
}

TEST(ApplyRenames, InconsistentInventoryRejected) {
  TokenStream stream = tokenize("x = 1\n", SourceLanguage::kPython);
  NameInventory other =
      classify_names(tokenize("y = 2\nz = y\n", SourceLanguage::kPython));
  RenameMap map;
  EXPECT_THROW(apply_renames(stream, map, other), InconsistentInventoryError);
}

TEST(AnonymizeSnippet, NoVariablesMeansUnchanged) {
  std::string source = "def f():\n    print(\"hi\")\n";
  EXPECT_EQ(anonymize_snippet(source, SourceLanguage::kPython,
                              CategorySet{true, false, false},
                              Strategy::kRandomGenerated,
                              NamingScheme::kRandomString, 9),
            source);
}

TEST(AnonymizeSnippet, SeedsChangeTextNotShape) {
  std::string source = testutil::gen_python_snippet(7);
  std::string one = anonymize_snippet(source, SourceLanguage::kPython,
                                      CategorySet::all(),
                                      Strategy::kRandomGenerated,
                                      NamingScheme::kRandomString, 1);
  std::string two = anonymize_snippet(source, SourceLanguage::kPython,
                                      CategorySet::all(),
                                      Strategy::kRandomGenerated,
                                      NamingScheme::kRandomString, 2);
  EXPECT_NE(one, two);
  TokenStream a = tokenize(one, SourceLanguage::kPython);
  TokenStream b = tokenize(two, SourceLanguage::kPython);
  ASSERT_EQ(a.tokens.size(), b.tokens.size());
  for (std::size_t i = 0; i < a.tokens.size(); ++i) {
    EXPECT_EQ(a.tokens[i].kind, b.tokens[i].kind);
  }
}

TEST(DeriveSeed, StablePerRecord) {
  EXPECT_EQ(derive_seed(1, "record-a"), derive_seed(1, "record-a"));
  EXPECT_NE(derive_seed(1, "record-a"), derive_seed(1, "record-b"));
  EXPECT_NE(derive_seed(1, "record-a"), derive_seed(2, "record-a"));
}

}  // namespace
}  // namespace nameblind
