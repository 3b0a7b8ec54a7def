#include "e7tensor/coset72.hpp"

namespace e7tensor {

namespace detail {

// Embedded copy of data/coset_words_e7a7.txt (kept byte-identical; the
// test suite pins the checksum of both).

extern const char* const kCosetWordsText;
const char* const kCosetWordsText =
    "1 +1\n"
    "2 +1 3 2\n"
    "3 +1 3 4\n"
    "4 +1 3 2 1 4\n"
    "5 +1 3 2 4 3\n"
    "6 +1 3 2 4 5\n"
    "7 +1 3 2 4 7\n"
    "8 +1 3 4 5 6\n"
    "9 +1 3 4 5 7\n"
    "10 +1 3 2 1 4 3 2\n"
    "11 +1 3 2 1 4 3 5\n"
    "12 +1 3 2 1 4 3 7\n"
    "13 +1 3 2 1 4 5 6\n"
    "14 +1 3 2 1 4 5 7\n"
    "15 +1 3 2 4 3 5 4\n"
    "16 +1 3 2 4 3 5 6\n"
    "17 +1 3 2 4 3 5 7\n"
    "18 +1 3 2 4 3 7 4\n"
    "19 +1 3 2 4 5 6 7\n"
    "20 +1 3 2 4 5 7 4\n"
    "21 +1 3 4 5 6 7 4\n"
    "22 +1 3 4 5 7 4 3\n"
    "23 +1 3 2 1 4 3 2 5 4\n"
    "24 +1 3 2 1 4 3 2 5 6\n"
    "25 +1 3 2 1 4 3 2 5 7\n"
    "26 +1 3 2 1 4 3 2 7 4\n"
    "27 +1 3 2 1 4 3 5 4 6\n"
    "28 +1 3 2 1 4 3 5 6 7\n"
    "29 +1 3 2 1 4 5 6 7 4\n"
    "30 +1 3 2 4 3 5 4 6 5\n"
    "31 +1 3 2 4 5 6 7 4 5\n"
    "32 +1 3 4 5 6 7 4 3 5\n"
    "33 +1 3 2 1 4 3 2 5 4 3 6\n"
    "34 +1 3 2 1 4 3 2 5 4 6 5\n"
    "35 +1 3 4 5 6 7 4 3 5 4 7\n"
    "36 +1 3 2 1 4 3 2 5 4 3 6 5 4\n"
    "37 -1 3\n"
    "38 -1 3 2 1\n"
    "39 -1 3 2 4\n"
    "40 -1 3 4 5\n"
    "41 -1 3 4 7\n"
    "42 -1 3 2 1 4 3\n"
    "43 -1 3 2 1 4 5\n"
    "44 -1 3 2 1 4 7\n"
    "45 -1 3 2 4 3 5\n"
    "46 -1 3 2 4 3 7\n"
    "47 -1 3 2 4 5 6\n"
    "48 -1 3 2 4 5 7\n"
    "49 -1 3 4 5 6 7\n"
    "50 -1 3 4 5 7 4\n"
    "51 -1 3 2 1 4 3 2 5\n"
    "52 -1 3 2 1 4 3 2 7\n"
    "53 -1 3 2 1 4 3 5 4\n"
    "54 -1 3 2 1 4 3 5 6\n"
    "55 -1 3 2 1 4 3 5 7\n"
    "56 -1 3 2 1 4 3 7 4\n"
    "57 -1 3 2 1 4 5 6 7\n"
    "58 -1 3 2 1 4 5 7 4\n"
    "59 -1 3 2 4 3 5 4 6\n"
    "60 -1 3 2 4 3 5 6 7\n"
    "61 -1 3 2 4 5 6 7 4\n"
    "62 -1 3 4 5 6 7 4 3\n"
    "63 -1 3 4 5 6 7 4 5\n"
    "64 -1 3 2 1 4 3 2 5 4 3\n"
    "65 -1 3 2 1 4 3 2 5 4 6\n"
    "66 -1 3 2 1 4 3 2 5 6 7\n"
    "67 -1 3 2 1 4 3 2 7 4 3\n"
    "68 -1 3 2 1 4 3 5 4 6 5\n"
    "69 -1 3 2 1 4 5 6 7 4 5\n"
    "70 -1 3 4 5 6 7 4 3 5 4\n"
    "71 -1 3 2 1 4 3 2 5 4 3 6 5\n"
    "72 -1 3 2 1 4 3 2 5 4 3 6 5 4 7\n";

// A7 images of the strictly dominant E7 weight (1,1,2,2,1,1,1) under the
// 72 words, in table order. Ground truth for the node-numbering search
// and the positional regression test.
extern const std::array<std::array<int, 7>, kCosetCount> kLabelingReferenceImages;
const std::array<std::array<int, 7>, kCosetCount> kLabelingReferenceImages = {{
    {{1, 1, 11, 1, 1, 2, 1}},
    {{2, 2, 8, 1, 1, 5, 1}},
    {{5, 1, 7, 1, 3, 2, 3}},
    {{4, 1, 6, 1, 3, 4, 3}},
    {{2, 4, 4, 1, 5, 1, 5}},
    {{5, 2, 5, 2, 2, 3, 4}},
    {{5, 2, 5, 1, 4, 3, 2}},
    {{7, 1, 6, 1, 2, 2, 5}},
    {{7, 1, 5, 2, 3, 2, 3}},
    {{2, 2, 4, 1, 6, 1, 6}},
    {{3, 3, 3, 2, 4, 2, 6}},
    {{3, 3, 3, 1, 6, 2, 4}},
    {{6, 1, 5, 1, 2, 4, 5}},
    {{6, 1, 4, 2, 3, 4, 3}},
    {{1, 6, 1, 4, 2, 1, 8}},
    {{4, 4, 3, 1, 4, 1, 7}},
    {{4, 4, 2, 2, 5, 1, 5}},
    {{1, 6, 1, 1, 8, 1, 2}},
    {{7, 2, 4, 1, 3, 3, 4}},
    {{8, 2, 2, 4, 1, 5, 1}},
    {{10, 1, 3, 3, 1, 4, 2}},
    {{11, 1, 1, 6, 1, 2, 1}},
    {{1, 4, 1, 4, 3, 1, 9}},
    {{4, 2, 3, 1, 5, 1, 8}},
    {{4, 2, 2, 2, 6, 1, 6}},
    {{1, 4, 1, 1, 9, 1, 3}},
    {{2, 5, 1, 3, 2, 2, 9}},
    {{5, 3, 2, 1, 5, 2, 6}},
    {{9, 1, 2, 3, 1, 6, 2}},
    {{1, 7, 1, 2, 2, 1, 10}},
    {{10, 2, 2, 2, 1, 6, 1}},
    {{13, 1, 1, 4, 1, 3, 1}},
    {{2, 2, 1, 5, 1, 1, 12}},
    {{1, 5, 1, 2, 3, 1, 11}},
    {{16, 1, 1, 2, 2, 1, 1}},
    {{1, 1, 3, 2, 1, 1, 15}},
    {{3, 1, 9, 1, 1, 4, 1}},
    {{2, 1, 8, 1, 1, 6, 1}},
    {{4, 2, 6, 1, 3, 3, 3}},
    {{6, 1, 6, 2, 2, 2, 4}},
    {{6, 1, 6, 1, 4, 2, 2}},
    {{2, 3, 4, 1, 5, 2, 5}},
    {{5, 1, 5, 2, 2, 4, 4}},
    {{5, 1, 5, 1, 4, 4, 2}},
    {{3, 4, 3, 2, 4, 1, 6}},
    {{3, 4, 3, 1, 6, 1, 4}},
    {{6, 2, 5, 1, 2, 3, 5}},
    {{6, 2, 4, 2, 3, 3, 3}},
    {{8, 1, 5, 1, 3, 2, 4}},
    {{9, 1, 3, 4, 1, 4, 1}},
    {{3, 2, 3, 2, 5, 1, 7}},
    {{3, 2, 3, 1, 7, 1, 5}},
    {{1, 5, 1, 4, 2, 2, 8}},
    {{4, 3, 3, 1, 4, 2, 7}},
    {{4, 3, 2, 2, 5, 2, 5}},
    {{1, 5, 1, 1, 8, 2, 2}},
    {{7, 1, 4, 1, 3, 4, 4}},
    {{8, 1, 2, 4, 1, 6, 1}},
    {{2, 6, 1, 3, 2, 1, 9}},
    {{5, 4, 2, 1, 5, 1, 6}},
    {{9, 2, 2, 3, 1, 5, 2}},
    {{12, 1, 1, 5, 1, 2, 2}},
    {{11, 1, 3, 2, 1, 5, 1}},
    {{1, 2, 1, 6, 1, 1, 11}},
    {{2, 4, 1, 3, 3, 1, 10}},
    {{5, 2, 2, 1, 6, 1, 7}},
    {{1, 2, 1, 1, 11, 1, 1}},
    {{1, 6, 1, 2, 2, 2, 10}},
    {{10, 1, 2, 2, 1, 7, 1}},
    {{15, 1, 1, 2, 3, 1, 1}},
    {{1, 3, 1, 4, 1, 1, 13}},
    {{1, 1, 2, 2, 1, 1, 16}},
}};

}  // namespace detail
}  // namespace e7tensor
