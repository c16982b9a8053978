#include "posetx/reference.hpp"

#include <stdexcept>

namespace posetx {

const std::vector<ReferenceClass>& reference_census() {
  static const std::vector<ReferenceClass> census = {
      // k, min, height, aut, copies, downsets, exponential sum
      {0, 0, 0, 1, 1, 1, "+1*1"},
      {1, 1, 1, 1, 1, 2, "+1*2 -1*1"},
      {2, 1, 2, 1, 2, 3, "+1*3 -1*2"},
      {2, 2, 1, 2, 1, 4, "+1*4 -2*2 +1*1"},
      {3, 1, 3, 1, 6, 4, "+1*4 -1*3"},
      {3, 1, 2, 2, 3, 5, "+1*5 -1*4"},
      {3, 2, 2, 2, 3, 5, "+1*5 -2*3 +1*2"},
      {3, 2, 2, 1, 6, 6, "+1*6 -1*4 -1*3 +1*2"},
      {3, 3, 1, 6, 1, 8, "+1*8 -3*4 +3*2 -1*1"},
      {4, 1, 4, 1, 24, 5, "+1*5 -1*4"},
      {4, 1, 3, 2, 12, 6, "+1*6 -1*5"},
      {4, 1, 3, 2, 12, 6, "+1*6 -1*5"},
      {4, 1, 3, 1, 24, 7, "+1*7 -1*6"},
      {4, 1, 2, 6, 4, 9, "+1*9 -1*8"},
      {4, 2, 3, 2, 12, 6, "+1*6 -2*4 +1*3"},
      {4, 2, 3, 1, 24, 7, "+1*7 -1*5 -1*4 +1*3"},
      {4, 2, 3, 1, 24, 8, "+1*8 -1*6 -1*4 +1*3"},
      {4, 2, 2, 4, 6, 7, "+1*7 -2*5 +1*4"},
      {4, 2, 2, 1, 24, 8, "+1*8 -1*6 -1*5 +1*4"},
      {4, 2, 2, 2, 12, 9, "+1*9 -2*6 +1*4"},
      {4, 2, 2, 2, 12, 10, "+1*10 -1*8 -1*5 +1*4"},
      {4, 3, 2, 6, 4, 9, "+1*9 -3*5 +3*3 -1*2"},
      {4, 3, 2, 2, 12, 10, "+1*10 -2*6 -1*5 +1*4 +2*3 -1*2"},
      {4, 3, 2, 2, 12, 12, "+1*12 -1*8 -2*6 +2*4 +1*3 -1*2"},
      {4, 4, 1, 24, 1, 16, "+1*16 -4*8 +6*4 -4*2 +1*1"},
      {5, 1, 5, 1, 120, 6, "+1*6 -1*5"},
      {5, 1, 4, 2, 60, 7, "+1*7 -1*6"},
      {5, 1, 4, 2, 60, 7, "+1*7 -1*6"},
      {5, 1, 4, 1, 120, 8, "+1*8 -1*7"},
      {5, 1, 3, 6, 20, 10, "+1*10 -1*9"},
      {5, 1, 4, 2, 60, 7, "+1*7 -1*6"},
      {5, 1, 4, 1, 120, 8, "+1*8 -1*7"},
      {5, 1, 4, 1, 120, 9, "+1*9 -1*8"},
      {5, 1, 3, 4, 30, 8, "+1*8 -1*7"},
      {5, 1, 3, 1, 120, 9, "+1*9 -1*8"},
      {5, 1, 3, 2, 60, 10, "+1*10 -1*9"},
      {5, 1, 3, 2, 60, 11, "+1*11 -1*10"},
      {5, 1, 3, 6, 20, 10, "+1*10 -1*9"},
      {5, 1, 3, 2, 60, 11, "+1*11 -1*10"},
      {5, 1, 3, 2, 60, 13, "+1*13 -1*12"},
      {5, 1, 2, 24, 5, 17, "+1*17 -1*16"},
      {5, 2, 4, 2, 60, 7, "+1*7 -2*5 +1*4"},
      {5, 2, 4, 1, 120, 8, "+1*8 -1*6 -1*5 +1*4"},
      {5, 2, 4, 1, 120, 9, "+1*9 -1*7 -1*5 +1*4"},
      {5, 2, 4, 1, 120, 10, "+1*10 -1*8 -1*5 +1*4"},
      {5, 2, 3, 4, 30, 8, "+1*8 -2*6 +1*5"},
      {5, 2, 3, 4, 30, 8, "+1*8 -2*6 +1*5"},
      {5, 2, 3, 2, 60, 9, "+1*9 -2*7 +1*6"},
      {5, 2, 3, 1, 120, 9, "+1*9 -1*7 -1*6 +1*5"},
      {5, 2, 3, 2, 60, 10, "+1*10 -2*7 +1*5"},
      {5, 2, 3, 2, 60, 11, "+1*11 -1*9 -1*6 +1*5"},
      {5, 2, 3, 2, 60, 9, "+1*9 -1*7 -1*6 +1*5"},
      {5, 2, 3, 1, 120, 10, "+1*10 -1*8 -1*7 +1*6"},
      {5, 2, 3, 1, 120, 10, "+1*10 -1*8 -1*6 +1*5"},
      {5, 2, 3, 1, 120, 10, "+1*10 -1*8 -1*7 +1*6"},
      {5, 2, 3, 1, 120, 11, "+1*11 -2*8 +1*6"},
      {5, 2, 3, 1, 120, 11, "+1*11 -1*9 -1*7 +1*6"},
      {5, 2, 3, 1, 120, 12, "+1*12 -1*10 -1*7 +1*6"},
      {5, 2, 3, 2, 60, 12, "+1*12 -1*10 -1*6 +1*5"},
      {5, 2, 3, 2, 60, 12, "+1*12 -1*10 -1*6 +1*5"},
      {5, 2, 3, 1, 120, 12, "+1*12 -1*9 -1*8 +1*6"},
      {5, 2, 3, 1, 120, 14, "+1*14 -1*12 -1*7 +1*6"},
      {5, 2, 2, 12, 10, 11, "+1*11 -2*9 +1*8"},
      {5, 2, 2, 2, 60, 12, "+1*12 -1*10 -1*9 +1*8"},
      {5, 2, 2, 2, 60, 13, "+1*13 -2*10 +1*8"},
      {5, 2, 2, 2, 60, 14, "+1*14 -1*12 -1*9 +1*8"},
      {5, 2, 2, 2, 60, 15, "+1*15 -1*12 -1*10 +1*8"},
      {5, 2, 2, 6, 20, 18, "+1*18 -1*16 -1*9 +1*8"},
      {5, 3, 3, 6, 20, 10, "+1*10 -3*6 +3*4 -1*3"},
      {5, 3, 3, 2, 60, 11, "+1*11 -2*7 -1*6 +1*5 +2*4 -1*3"},
      {5, 3, 3, 2, 60, 12, "+1*12 -2*8 +2*4 -1*3"},
      {5, 3, 3, 2, 60, 13, "+1*13 -1*9 -2*7 +2*5 +1*4 -1*3"},
      {5, 3, 3, 1, 120, 14, "+1*14 -1*10 -1*8 -1*7 +1*6 +1*5 +1*4 -1*3"},
      {5, 3, 3, 2, 60, 16, "+1*16 -1*12 -2*8 +2*6 +1*4 -1*3"},
      {5, 3, 2, 12, 10, 11, "+1*11 -3*7 +3*5 -1*4"},
      {5, 3, 2, 2, 60, 12, "+1*12 -2*8 -1*7 +1*6 +2*5 -1*4"},
      {5, 3, 2, 2, 60, 13, "+1*13 -1*9 -2*8 +2*6 +1*5 -1*4"},
      {5, 3, 2, 4, 30, 14, "+1*14 -2*10 +1*8 -1*7 +2*5 -1*4"},
      {5, 3, 2, 2, 60, 14, "+1*14 -1*10 -2*8 +2*6 +1*5 -1*4"},
      {5, 3, 2, 2, 60, 15, "+1*15 -1*10 -2*9 +3*6 -1*4"},
      {5, 3, 2, 1, 120, 16, "+1*16 -1*12 -1*10 +1*6 +1*5 -1*4"},
      {5, 3, 2, 2, 60, 18, "+1*18 -2*12 -1*9 +1*8 +2*6 -1*4"},
      {5, 3, 2, 4, 30, 20, "+1*20 -1*16 -2*10 +2*8 +1*5 -1*4"},
      {5, 4, 2, 24, 5, 17, "+1*17 -4*9 +6*5 -4*3 +1*2"},
      {5, 4, 2, 6, 20, 18, "+1*18 -3*10 -1*9 +3*6 +3*5 -1*4 -3*3 +1*2"},
      {5, 4, 2, 4, 30, 20, "+1*20 -2*12 -2*10 +1*8 +4*6 +1*5 -2*4 -2*3 +1*2"},
      {5, 4, 2, 6, 20, 24, "+1*24 -1*16 -3*12 +3*8 +3*6 -3*4 -1*3 +1*2"},
      {5, 5, 1, 120, 1, 32, "+1*32 -5*16 +10*8 -10*4 +5*2 -1*1"},
  };
  return census;
}

const std::vector<Int>& reference_labeled_counts() {
  static const std::vector<Int> p = {1, 1, 3, 19, 219, 4231, 130023};
  return p;
}

const char* reference_e_k(int k) {
  switch (k) {
    case 0: return "+1*1";
    case 1: return "+1*2 -1*1";
    case 2: return "+1*4 +2*3 -4*2 +1*1";
    case 3: return "+1*8 +6*6 +6*5 -6*4 -18*3 +12*2 -1*1";
    case 4:
      return "+1*16 +12*12 +24*10 +20*9 +16*8 +54*7 -108*6 -96*5 +108*3 -32*2 +1*1";
    case 5:
      return "+1*32 +20*24 +60*20 +100*18 +10*17 +100*16 +120*15 +390*14 +240*13 "
             "-180*12 +500*11 -540*10 -300*9 -830*8 -1650*7 +1200*6 +900*5 +320*4 "
             "-540*3 +80*2 -1*1";
    default: throw std::invalid_argument("reference_e_k: k out of range");
  }
}

const char* reference_e_kn(int k, int n) {
  if (k == 1 && n == 1) return "+1*2 -1*1";
  if (k == 2 && n == 1) return "+2*3 -2*2";
  if (k == 2 && n == 2) return "+1*4 -2*2 +1*1";
  if (k == 3 && n == 1) return "+3*5 +3*4 -6*3";
  if (k == 3 && n == 2) return "+6*6 +3*5 -6*4 -12*3 +9*2";
  if (k == 3 && n == 3) return "+1*8 -3*4 +3*2 -1*1";
  if (k == 4 && n == 1) return "+4*9 -4*8 +24*7 -24*4";
  if (k == 4 && n == 2) return "+12*10 +12*9 +36*8 +30*7 -60*6 -72*5 -18*4 +60*3";
  if (k == 4 && n == 3)
    return "+12*12 +12*10 +4*9 -12*8 -48*6 -24*5 +36*4 +48*3 -28*2";
  if (k == 4 && n == 4) return "+1*16 -4*8 +6*4 -4*2 +1*1";
  if (k == 5 && n == 1)
    return "+5*17 -5*16 +60*13 -60*12 +120*11 -20*10 +140*9 +30*8 -90*7 -60*6 -120*5";
  if (k == 5 && n == 2)
    return "+20*18 -20*16 +60*15 +180*14 +60*13 +180*12 +310*11 +60*10 -100*9 "
           "-390*8 -1080*7 +180*6 +120*5 +420*4";
  if (k == 5 && n == 3)
    return "+30*20 +60*18 +150*16 +60*15 +210*14 +120*13 -180*12 +70*11 -460*10 "
           "-300*9 -570*8 -480*7 +840*6 +780*5 +50*4 -380*3";
  if (k == 5 && n == 4)
    return "+20*24 +30*20 +20*18 +5*17 -20*16 -120*12 -120*10 -40*9 +90*8 +240*6 "
           "+120*5 -140*4 -160*3 +75*2";
  if (k == 5 && n == 5) return "+1*32 -5*16 +10*8 -10*4 +5*2 -1*1";
  throw std::invalid_argument("reference_e_kn: out of range");
}

const char* reference_e_kh(int k, int h) {
  if (k == 3 && h == 1) return "+1*8 -3*4 +3*2 -1*1";
  if (k == 3 && h == 2) return "+6*6 +6*5 -9*4 -12*3 +9*2";
  if (k == 3 && h == 3) return "+6*4 -6*3";
  if (k == 4 && h == 1) return "+1*16 -4*8 +6*4 -4*2 +1*1";
  if (k == 4 && h == 2)
    return "+12*12 +24*10 +20*9 -4*8 +6*7 -96*6 -72*5 +90*4 +48*3 -28*2";
  if (k == 4 && h == 3) return "+24*8 +48*7 -12*6 -48*5 -72*4 +60*3";
  if (k == 4 && h == 4) return "+24*5 -24*4";
  if (k == 5 && h == 1) return "+1*32 -5*16 +10*8 -10*4 +5*2 -1*1";
  if (k == 5 && h == 2)
    return "+20*24 +60*20 +100*18 +10*17 +45*16 +120*15 +150*14 +120*13 -360*12 "
           "+20*11 -720*10 -440*9 +150*8 -120*7 +960*6 +600*5 -630*4 -160*3 +75*2";
  if (k == 5 && h == 3)
    return "+60*16 +240*14 +120*13 +180*12 +480*11 +60*10 -100*9 -1110*8 -1410*7 "
           "+420*6 +900*5 +540*4 -380*3";
  if (k == 5 && h == 4)
    return "+120*10 +240*9 +120*8 -120*7 -300*6 -480*5 +420*4";
  if (k == 5 && h == 5) return "+120*6 -120*5";
  throw std::invalid_argument("reference_e_kh: out of range");
}

const std::vector<std::vector<long long>>& reference_extension_table() {
  static const std::vector<std::vector<long long>> table = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 3, 7, 15, 31, 63, 127, 255, 511},
      {1, 5, 19, 65, 211, 665, 2059, 6305, 19171},
      {1, 9, 49, 225, 961, 3969, 16129, 65025, 261121},
      {1, 7, 37, 175, 781, 3367, 14197, 58975, 242461},
      {1, 9, 61, 369, 2101, 11529, 61741, 325089, 1690981},
      {1, 11, 79, 479, 2671, 14231, 73879, 377759, 1914271},
      {1, 15, 133, 975, 6541, 41895, 261493, 1607775, 9796381},
      {1, 27, 343, 3375, 29791, 250047, 2048383, 16581375, 133432831},
  };
  return table;
}

const std::vector<int>& reference_fence_upset_classes() {
  static const std::vector<int> classes = {1, 2, 2, 3, 4, 6, 8, 19};
  return classes;
}

}  // namespace posetx
