#include "weyl/appendix_data.hpp"

namespace weyl::detail {

// Root lists of the 74 sporadic systems, in the word notation of the
// published tables.  Checked against kFixtureChecksum before use.
const char* const kFixtureText = R"FX(# rank 3
# nr 1
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{2}23
1^{3}23

# rank 3
# nr 2
1
2
3
12
13
23
1^{2}2
123
1^{2}23
1^{2}2^{2}3

# rank 3
# nr 3
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{2}23
1^{3}23
1^{3}2^{2}3

# rank 3
# nr 4
1
2
3
12
13
1^{2}2
123
1^{3}2
1^{2}23
1^{3}23
1^{3}2^{2}3
1^{4}2^{2}3

# rank 3
# nr 5
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{2}23
1^{3}23
1^{2}2^{2}3
1^{3}2^{2}3

# rank 3
# nr 6
1
2
3
12
13
1^{2}2
123
1^{3}2
1^{2}23
1^{3}2^{2}
1^{3}23
1^{3}2^{2}3
1^{4}2^{2}3

# rank 3
# nr 7
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}23
1^{4}23
1^{4}2^{2}3

# rank 3
# nr 8
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{2}23
1^{3}23
1^{2}2^{2}3
1^{3}2^{2}3
1^{4}2^{2}3

# rank 3
# nr 9
1
2
3
12
13
1^{2}2
123
13^{2}
1^{2}23
123^{2}
1^{2}23^{2}
1^{3}23^{2}
1^{3}2^{2}3^{2}

# rank 3
# nr 10
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3

# rank 3
# nr 11
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3

# rank 3
# nr 12
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3

# rank 3
# nr 13
1
2
3
12
23
1^{2}2
123
1^{3}2
1^{2}23
12^{2}3
1^{3}23
1^{2}2^{2}3
1^{3}2^{2}3
1^{4}2^{2}3
1^{4}2^{3}3
1^{4}2^{3}3^{2}

# rank 3
# nr 14
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}23
1^{4}23
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3

# rank 3
# nr 15
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{5}2^{2}3^{2}

# rank 3
# nr 16
1
2
3
12
13
1^{2}2
123
1^{3}2
1^{2}23
1^{3}23
1^{2}2^{2}3
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{5}2^{3}3
1^{5}2^{3}3^{2}
1^{6}2^{3}3^{2}

# rank 3
# nr 17
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{5}2^{3}3
1^{6}2^{3}3

# rank 3
# nr 18
1
2
3
12
13
23
1^{2}2
123
1^{3}2
1^{2}23
12^{2}3
1^{3}23
1^{2}2^{2}3
1^{3}2^{2}3
1^{4}2^{2}3
1^{3}2^{3}3
1^{4}2^{3}3
1^{4}2^{3}3^{2}

# rank 3
# nr 19
1
2
3
12
13
1^{2}2
123
1^{3}2
1^{2}23
1^{4}2
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{7}2^{3}3^{2}

# rank 3
# nr 20
1
2
3
12
23
1^{2}2
123
1^{3}2
1^{2}23
1^{4}2
1^{3}23
1^{2}2^{2}3
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{6}2^{3}3
1^{6}2^{3}3^{2}

# rank 3
# nr 21
1
2
3
12
13
23
1^{2}2
12^{2}
123
1^{3}2
1^{2}23
12^{2}3
1^{3}23
1^{2}2^{2}3
1^{3}2^{2}3
1^{4}2^{2}3
1^{3}2^{3}3
1^{4}2^{3}3
1^{4}2^{3}3^{2}

# rank 3
# nr 22
1
2
3
12
13
23
1^{2}2
123
1^{3}2
1^{2}23
12^{2}3
1^{3}2^{2}
1^{3}23
1^{2}2^{2}3
1^{3}2^{2}3
1^{4}2^{2}3
1^{3}2^{3}3
1^{4}2^{3}3
1^{4}2^{3}3^{2}

# rank 3
# nr 23
1
2
3
12
23
1^{2}2
123
1^{3}2
1^{2}23
1^{3}2^{2}
1^{3}23
1^{2}2^{2}3
1^{3}2^{2}3
1^{4}2^{2}3
1^{3}2^{3}3
1^{4}2^{3}3
1^{5}2^{3}3
1^{6}2^{3}3
1^{6}2^{4}3

# rank 3
# nr 24
1
2
3
12
13
1^{2}2
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3

# rank 3
# nr 25
1
2
3
12
13
1^{2}2
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{7}2^{3}3^{2}

# rank 3
# nr 26
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}2^{2}
1^{3}23
1^{2}2^{2}3
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{4}2^{3}3
1^{5}2^{3}3
1^{6}2^{3}3^{2}

# rank 3
# nr 27
1
2
3
12
13
1^{2}2
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{7}2^{3}3^{2}

# rank 3
# nr 28
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}2^{2}
1^{3}23
1^{2}2^{2}3
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{4}2^{3}3
1^{5}2^{3}3
1^{6}2^{3}3
1^{6}2^{3}3^{2}

# rank 3
# nr 29
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{5}2^{3}3
1^{5}2^{2}3^{2}
1^{6}2^{3}3
1^{6}2^{3}3^{2}
1^{7}2^{3}3^{2}

# rank 3
# nr 30
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}2^{2}
1^{3}23
1^{2}2^{2}3
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{4}2^{3}3
1^{5}2^{3}3
1^{5}2^{2}3^{2}
1^{5}2^{3}3^{2}
1^{6}2^{3}3^{2}

# rank 3
# nr 31
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{8}2^{3}3^{2}

# rank 3
# nr 32
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}

# rank 3
# nr 33
1
2
3
12
13
1^{2}2
1^{2}3
12^{2}
123
1^{3}2
1^{2}23
12^{2}3
1^{3}23
1^{2}2^{2}3
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{3}2^{3}3
1^{3}2^{2}3^{2}
1^{4}2^{3}3
1^{5}2^{3}3
1^{4}2^{3}3^{2}
1^{5}2^{3}3^{2}
1^{6}2^{3}3^{2}
1^{7}2^{4}3^{2}

# rank 3
# nr 34
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{3}2^{2}
1^{3}23
1^{2}2^{2}3
1^{4}23
1^{3}2^{2}3
1^{4}2^{2}3
1^{5}2^{2}3
1^{4}2^{3}3
1^{5}2^{3}3
1^{5}2^{2}3^{2}
1^{6}2^{3}3
1^{5}2^{3}3^{2}
1^{6}2^{3}3^{2}
1^{7}2^{3}3^{2}
1^{7}2^{4}3^{2}

# rank 3
# nr 35
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}

# rank 3
# nr 36
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}

# rank 3
# nr 37
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}

# rank 3
# nr 38
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{2}3^{2}
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}

# rank 3
# nr 39
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{7}2^{2}3^{2}
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}

# rank 3
# nr 40
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{2}3^{2}
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}

# rank 3
# nr 41
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{2}3^{2}
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}
1^{9}2^{4}3^{2}

# rank 3
# nr 42
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{2}3^{2}
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}
1^{11}2^{4}3^{2}

# rank 3
# nr 43
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{2}3^{2}
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{7}2^{2}3^{2}
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}

# rank 3
# nr 44
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{2}3^{2}
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}
1^{9}2^{4}3^{2}

# rank 3
# nr 45
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{2}3^{2}
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}
1^{11}2^{4}3^{2}

# rank 3
# nr 46
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{2}3^{2}
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{7}2^{2}3^{2}
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}
1^{9}2^{4}3^{2}

# rank 3
# nr 47
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}23
1^{5}2
1^{4}23
1^{6}2
1^{5}23
1^{4}2^{2}3
1^{6}23
1^{5}2^{2}3
1^{7}23
1^{6}2^{2}3
1^{7}2^{2}3
1^{8}2^{2}3
1^{9}2^{2}3
1^{10}2^{2}3
1^{9}2^{3}3
1^{10}2^{3}3
1^{11}2^{3}3
1^{10}2^{3}3^{2}
1^{11}2^{3}3^{2}
1^{12}2^{3}3^{2}

# rank 3
# nr 48
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{2}3^{2}
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{7}2^{2}3^{2}
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{3}3^{2}
1^{9}2^{3}3^{2}
1^{9}2^{4}3^{2}
1^{11}2^{4}3^{2}

# rank 3
# nr 49
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{3}3
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{8}2^{4}3
1^{8}2^{3}3^{2}
1^{9}2^{4}3
1^{9}2^{3}3^{2}
1^{9}2^{4}3^{2}
1^{11}2^{4}3^{2}
1^{11}2^{5}3^{2}
1^{12}2^{5}3^{2}

# rank 3
# nr 50
1
2
3
12
13
1^{2}2
1^{2}3
123
1^{3}2
1^{2}23
1^{4}2
1^{3}2^{2}
1^{3}23
1^{4}23
1^{3}2^{2}3
1^{5}2^{2}
1^{5}23
1^{4}2^{2}3
1^{5}2^{2}3
1^{6}2^{2}3
1^{5}2^{3}3
1^{7}2^{2}3
1^{6}2^{3}3
1^{7}2^{3}3
1^{8}2^{3}3
1^{7}2^{3}3^{2}
1^{9}2^{3}3
1^{8}2^{4}3
1^{8}2^{3}3^{2}
1^{9}2^{4}3
1^{9}2^{3}3^{2}
1^{10}2^{4}3
1^{9}2^{4}3^{2}
1^{11}2^{4}3^{2}
1^{11}2^{5}3^{2}
1^{12}2^{5}3^{2}
1^{13}2^{5}3^{2}

# rank 4
# nr 1
1
2
3
4
12
13
14
23
123
124
134
1^{2}24
1234
1^{2}234
1^{2}2^{2}34

# rank 4
# nr 2
1
2
3
4
12
13
14
1^{2}2
123
124
134
1^{2}23
1^{2}24
1234
1^{2}234
1^{3}234
1^{3}2^{2}34

# rank 4
# nr 3
1
2
3
4
12
13
24
1^{2}2
123
124
1^{2}23
1^{2}24
1234
1^{2}2^{2}4
1^{2}234
1^{2}2^{2}34
1^{3}2^{2}34
1^{3}2^{2}3^{2}4

# rank 4
# nr 4
1
2
3
4
12
13
14
23
1^{2}2
123
124
134
1^{2}23
1^{2}24
1234
1^{2}2^{2}3
1^{2}234
1^{3}234
1^{2}2^{2}34
1^{3}2^{2}34
1^{3}2^{2}3^{2}4

# rank 4
# nr 5
1
2
3
4
12
13
24
1^{2}2
1^{2}3
123
124
1^{2}23
1^{2}24
1234
1^{3}23
1^{2}2^{2}4
1^{2}234
1^{3}234
1^{2}2^{2}34
1^{3}2^{2}34
1^{4}2^{2}34
1^{4}2^{2}3^{2}4

# rank 4
# nr 6
1
2
3
4
12
13
24
1^{2}2
123
124
1^{2}23
1^{2}24
1234
1^{2}2^{2}4
1^{2}23^{2}
1^{2}234
1^{2}2^{2}34
1^{2}23^{2}4
1^{3}2^{2}34
1^{2}2^{2}3^{2}4
1^{3}2^{2}3^{2}4
1^{4}2^{2}3^{2}4
1^{4}2^{3}3^{2}4
1^{4}2^{3}3^{2}4^{2}

# rank 4
# nr 7
1
2
3
4
12
13
23
34
1^{2}2
123
134
234
1^{2}23
1234
13^{2}4
1^{2}2^{2}3
1^{2}234
123^{2}4
1^{2}2^{2}34
1^{2}23^{2}4
1^{3}23^{2}4
1^{2}2^{2}3^{2}4
1^{3}2^{2}3^{2}4
1^{3}2^{2}3^{3}4
1^{3}2^{2}3^{3}4^{2}

# rank 4
# nr 8
1
2
3
4
12
13
34
1^{2}2
1^{2}3
123
134
1^{2}23
1^{2}34
1234
1^{3}23
1^{2}234
1^{2}3^{2}4
1^{3}2^{2}3
1^{3}234
1^{2}23^{2}4
1^{3}2^{2}34
1^{3}23^{2}4
1^{4}23^{2}4
1^{3}2^{2}3^{2}4
1^{4}2^{2}3^{2}4
1^{5}2^{2}3^{2}4
1^{5}2^{2}3^{3}4
1^{5}2^{2}3^{3}4^{2}

# rank 4
# nr 9
1
2
3
4
12
13
34
1^{2}2
123
134
1^{3}2
1^{2}23
1234
1^{3}2^{2}
1^{3}23
1^{2}234
1^{3}2^{2}3
1^{3}234
1^{2}23^{2}4
1^{4}2^{2}3
1^{3}2^{2}34
1^{3}23^{2}4
1^{4}2^{2}34
1^{3}2^{2}3^{2}4
1^{4}2^{2}3^{2}4
1^{5}2^{2}3^{2}4
1^{5}2^{3}3^{2}4
1^{6}2^{3}3^{2}4
1^{6}2^{3}3^{3}4
1^{6}2^{3}3^{3}4^{2}

# rank 4
# nr 10
1
2
3
4
12
13
34
1^{2}2
1^{2}3
123
134
1^{3}2
1^{2}23
1^{2}34
1234
1^{3}23
1^{2}234
1^{2}3^{2}4
1^{4}23
1^{3}234
1^{2}23^{2}4
1^{4}2^{2}3
1^{4}234
1^{3}23^{2}4
1^{4}2^{2}34
1^{4}23^{2}4
1^{5}23^{2}4
1^{4}2^{2}3^{2}4
1^{5}2^{2}3^{2}4
1^{6}2^{2}3^{2}4
1^{6}2^{2}3^{3}4
1^{6}2^{2}3^{3}4^{2}

# rank 4
# nr 11
1
2
3
4
12
13
24
1^{2}2
1^{2}3
123
124
1^{2}23
1^{2}24
1234
1^{3}23
1^{2}2^{2}3
1^{2}2^{2}4
1^{2}234
1^{3}2^{2}3
1^{3}234
1^{2}2^{2}34
1^{4}2^{2}3
1^{3}2^{2}34
1^{4}2^{2}34
1^{3}2^{3}34
1^{4}2^{3}34
1^{4}2^{2}3^{2}4
1^{5}2^{3}34
1^{4}2^{3}3^{2}4
1^{5}2^{3}3^{2}4
1^{6}2^{3}3^{2}4
1^{6}2^{4}3^{2}4

# rank 5
# nr 1
1
2
3
4
5
12
13
14
23
25
123
124
125
134
235
1234
1235
1245
1^{2}234
12^{2}35
12345
1^{2}2345
12^{2}345
1^{2}2^{2}345
1^{2}2^{2}3^{2}45

# rank 5
# nr 2
1
2
3
4
5
12
13
14
23
35
123
124
134
135
235
1^{2}24
1234
1235
1345
1^{2}234
123^{2}5
12345
1^{2}2^{2}34
1^{2}2345
123^{2}45
1^{2}2^{2}345
1^{2}23^{2}45
1^{2}2^{2}3^{2}45
1^{3}2^{2}3^{2}45
1^{3}2^{2}3^{2}4^{2}5

# rank 5
# nr 3
1
2
3
4
5
12
13
14
35
1^{2}2
123
124
134
135
1^{2}23
1^{2}24
1234
1235
1345
1^{2}234
1^{2}235
12345
1^{3}234
1^{2}23^{2}5
1^{2}2345
1^{3}2^{2}34
1^{3}2345
1^{2}23^{2}45
1^{3}2^{2}345
1^{3}23^{2}45
1^{3}2^{2}3^{2}45
1^{4}2^{2}3^{2}45
1^{4}2^{2}3^{2}4^{2}5

# rank 5
# nr 4
1
2
3
4
5
12
13
24
45
1^{2}2
123
124
245
1^{2}23
1^{2}24
1234
1245
1^{2}2^{2}4
1^{2}234
1^{2}245
12345
1^{2}2^{2}34
1^{2}2^{2}45
1^{2}2345
1^{3}2^{2}34
1^{2}2^{2}345
1^{2}2^{2}4^{2}5
1^{3}2^{2}3^{2}4
1^{3}2^{2}345
1^{2}2^{2}34^{2}5
1^{3}2^{2}3^{2}45
1^{3}2^{2}34^{2}5
1^{3}2^{3}34^{2}5
1^{3}2^{2}3^{2}4^{2}5
1^{4}2^{3}34^{2}5
1^{3}2^{3}3^{2}4^{2}5
1^{4}2^{3}3^{2}4^{2}5
1^{5}2^{3}3^{2}4^{2}5
1^{5}2^{4}3^{2}4^{2}5
1^{5}2^{4}3^{2}4^{3}5
1^{5}2^{4}3^{2}4^{3}5^{2}

# rank 5
# nr 5
1
2
3
4
5
12
13
14
23
45
1^{2}2
123
124
134
145
1^{2}23
1^{2}24
1234
1245
1345
1^{2}2^{2}3
1^{2}234
1^{2}245
12345
1^{3}234
1^{2}2^{2}34
1^{2}2345
1^{2}24^{2}5
1^{3}2^{2}34
1^{3}2345
1^{2}2^{2}345
1^{2}234^{2}5
1^{3}2^{2}3^{2}4
1^{3}2^{2}345
1^{3}234^{2}5
1^{2}2^{2}34^{2}5
1^{3}2^{2}3^{2}45
1^{3}2^{2}34^{2}5
1^{4}2^{2}34^{2}5
1^{3}2^{2}3^{2}4^{2}5
1^{4}2^{3}34^{2}5
1^{4}2^{2}3^{2}4^{2}5
1^{4}2^{3}3^{2}4^{2}5
1^{5}2^{3}3^{2}4^{2}5
1^{5}2^{3}3^{2}4^{3}5
1^{5}2^{3}3^{2}4^{3}5^{2}

# rank 5
# nr 6
1
2
3
4
5
12
13
24
45
1^{2}2
1^{2}3
123
124
245
1^{2}23
1^{2}24
1234
1245
1^{3}23
1^{2}2^{2}4
1^{2}234
1^{2}245
12345
1^{3}234
1^{2}2^{2}34
1^{2}2^{2}45
1^{2}2345
1^{3}2^{2}34
1^{3}2345
1^{2}2^{2}345
1^{2}2^{2}4^{2}5
1^{4}2^{2}34
1^{3}2^{2}345
1^{2}2^{2}34^{2}5
1^{4}2^{2}3^{2}4
1^{4}2^{2}345
1^{3}2^{2}34^{2}5
1^{4}2^{2}3^{2}45
1^{4}2^{2}34^{2}5
1^{3}2^{3}34^{2}5
1^{4}2^{3}34^{2}5
1^{4}2^{2}3^{2}4^{2}5
1^{5}2^{3}34^{2}5
1^{4}2^{3}3^{2}4^{2}5
1^{5}2^{3}3^{2}4^{2}5
1^{6}2^{3}3^{2}4^{2}5
1^{6}2^{4}3^{2}4^{2}5
1^{6}2^{4}3^{2}4^{3}5
1^{6}2^{4}3^{2}4^{3}5^{2}

# rank 6
# nr 1
1
2
3
4
5
6
12
13
14
25
36
123
124
125
134
136
1234
1235
1236
1245
1346
1^{2}234
12345
12346
12356
1^{2}2345
1^{2}2346
123456
1^{2}2^{2}345
1^{2}23^{2}46
1^{2}23456
1^{2}2^{2}3456
1^{2}23^{2}456
1^{2}2^{2}3^{2}456
1^{3}2^{2}3^{2}456
1^{3}2^{2}3^{2}4^{2}56

# rank 6
# nr 2
1
2
3
4
5
6
12
13
14
23
25
46
123
124
125
134
146
235
1234
1235
1245
1246
1346
1^{2}234
12^{2}35
12345
12346
12456
1^{2}2345
1^{2}2346
12^{2}345
123456
1^{2}2^{2}345
1^{2}234^{2}6
1^{2}23456
12^{2}3456
1^{2}2^{2}3^{2}45
1^{2}2^{2}3456
1^{2}234^{2}56
1^{2}2^{2}3^{2}456
1^{2}2^{2}34^{2}56
1^{3}2^{2}34^{2}56
1^{2}2^{2}3^{2}4^{2}56
1^{3}2^{2}3^{2}4^{2}56
1^{3}2^{3}3^{2}4^{2}56
1^{3}2^{3}3^{2}4^{2}5^{2}6

# rank 6
# nr 3
1
2
3
4
5
6
12
13
14
23
35
56
123
124
134
135
235
356
1^{2}24
1234
1235
1345
1356
2356
1^{2}234
123^{2}5
12345
12356
13456
1^{2}2^{2}34
1^{2}2345
123^{2}45
123^{2}56
123456
1^{2}2^{2}345
1^{2}23^{2}45
1^{2}23456
123^{2}456
123^{2}5^{2}6
1^{2}2^{2}3^{2}45
1^{2}2^{2}3456
1^{2}23^{2}456
123^{2}45^{2}6
1^{3}2^{2}3^{2}45
1^{2}2^{2}3^{2}456
1^{2}23^{2}45^{2}6
1^{3}2^{2}3^{2}4^{2}5
1^{3}2^{2}3^{2}456
1^{2}2^{2}3^{2}45^{2}6
1^{2}23^{3}45^{2}6
1^{3}2^{2}3^{2}4^{2}56
1^{3}2^{2}3^{2}45^{2}6
1^{2}2^{2}3^{3}45^{2}6
1^{3}2^{2}3^{3}45^{2}6
1^{3}2^{2}3^{2}4^{2}5^{2}6
1^{3}2^{3}3^{3}45^{2}6
1^{3}2^{2}3^{3}4^{2}5^{2}6
1^{4}2^{2}3^{3}4^{2}5^{2}6
1^{3}2^{3}3^{3}4^{2}5^{2}6
1^{4}2^{3}3^{3}4^{2}5^{2}6
1^{4}2^{3}3^{4}4^{2}5^{2}6
1^{4}2^{3}3^{4}4^{2}5^{3}6
1^{4}2^{3}3^{4}4^{2}5^{3}6^{2}

# rank 6
# nr 4
1
2
3
4
5
6
12
13
14
35
56
1^{2}2
123
124
134
135
356
1^{2}23
1^{2}24
1234
1235
1345
1356
1^{2}234
1^{2}235
12345
12356
13456
1^{3}234
1^{2}23^{2}5
1^{2}2345
1^{2}2356
123456
1^{3}2^{2}34
1^{3}2345
1^{2}23^{2}45
1^{2}23^{2}56
1^{2}23456
1^{3}2^{2}345
1^{3}23^{2}45
1^{3}23456
1^{2}23^{2}456
1^{2}23^{2}5^{2}6
1^{3}2^{2}3^{2}45
1^{3}2^{2}3456
1^{3}23^{2}456
1^{2}23^{2}45^{2}6
1^{4}2^{2}3^{2}45
1^{3}2^{2}3^{2}456
1^{3}23^{2}45^{2}6
1^{4}2^{2}3^{2}4^{2}5
1^{4}2^{2}3^{2}456
1^{3}2^{2}3^{2}45^{2}6
1^{3}23^{3}45^{2}6
1^{4}2^{2}3^{2}4^{2}56
1^{4}2^{2}3^{2}45^{2}6
1^{3}2^{2}3^{3}45^{2}6
1^{4}2^{2}3^{3}45^{2}6
1^{4}2^{2}3^{2}4^{2}5^{2}6
1^{5}2^{2}3^{3}45^{2}6
1^{4}2^{2}3^{3}4^{2}5^{2}6
1^{5}2^{3}3^{3}45^{2}6
1^{5}2^{2}3^{3}4^{2}5^{2}6
1^{5}2^{3}3^{3}4^{2}5^{2}6
1^{6}2^{3}3^{3}4^{2}5^{2}6
1^{6}2^{3}3^{4}4^{2}5^{2}6
1^{6}2^{3}3^{4}4^{2}5^{3}6
1^{6}2^{3}3^{4}4^{2}5^{3}6^{2}

# rank 7
# nr 1
1
2
3
4
5
6
7
12
13
14
25
36
57
123
124
125
134
136
257
1234
1235
1236
1245
1257
1346
1^{2}234
12345
12346
12356
12357
12457
1^{2}2345
1^{2}2346
123456
123457
123567
1^{2}2^{2}345
1^{2}23^{2}46
1^{2}23456
1^{2}23457
1234567
1^{2}2^{2}3456
1^{2}2^{2}3457
1^{2}23^{2}456
1^{2}234567
1^{2}2^{2}3^{2}456
1^{2}2^{2}345^{2}7
1^{2}2^{2}34567
1^{2}23^{2}4567
1^{3}2^{2}3^{2}456
1^{2}2^{2}3^{2}4567
1^{2}2^{2}345^{2}67
1^{3}2^{2}3^{2}4^{2}56
1^{3}2^{2}3^{2}4567
1^{2}2^{2}3^{2}45^{2}67
1^{3}2^{2}3^{2}4^{2}567
1^{3}2^{2}3^{2}45^{2}67
1^{3}2^{3}3^{2}45^{2}67
1^{3}2^{2}3^{2}4^{2}5^{2}67
1^{3}2^{3}3^{2}4^{2}5^{2}67
1^{4}2^{3}3^{2}4^{2}5^{2}67
1^{4}2^{3}3^{3}4^{2}5^{2}67
1^{4}2^{3}3^{3}4^{2}5^{2}6^{2}7

# rank 7
# nr 2
1
2
3
4
5
6
7
12
13
14
23
25
46
67
123
124
125
134
146
235
467
1234
1235
1245
1246
1346
1467
1^{2}234
12^{2}35
12345
12346
12456
12467
13467
1^{2}2345
1^{2}2346
12^{2}345
123456
123467
124567
1^{2}2^{2}345
1^{2}234^{2}6
1^{2}23456
1^{2}23467
12^{2}3456
1234567
1^{2}2^{2}3^{2}45
1^{2}2^{2}3456
1^{2}234^{2}56
1^{2}234^{2}67
1^{2}234567
12^{2}34567
1^{2}2^{2}3^{2}456
1^{2}2^{2}34^{2}56
1^{2}2^{2}34567
1^{2}234^{2}567
1^{2}234^{2}6^{2}7
1^{3}2^{2}34^{2}56
1^{2}2^{2}3^{2}4^{2}56
1^{2}2^{2}3^{2}4567
1^{2}2^{2}34^{2}567
1^{2}234^{2}56^{2}7
1^{3}2^{2}3^{2}4^{2}56
1^{3}2^{2}34^{2}567
1^{2}2^{2}3^{2}4^{2}567
1^{2}2^{2}34^{2}56^{2}7
1^{3}2^{3}3^{2}4^{2}56
1^{3}2^{2}3^{2}4^{2}567
1^{3}2^{2}34^{2}56^{2}7
1^{2}2^{2}3^{2}4^{2}56^{2}7
1^{3}2^{3}3^{2}4^{2}5^{2}6
1^{3}2^{3}3^{2}4^{2}567
1^{3}2^{2}3^{2}4^{2}56^{2}7
1^{3}2^{2}34^{3}56^{2}7
1^{3}2^{3}3^{2}4^{2}5^{2}67
1^{3}2^{3}3^{2}4^{2}56^{2}7
1^{3}2^{2}3^{2}4^{3}56^{2}7
1^{4}2^{2}3^{2}4^{3}56^{2}7
1^{3}2^{3}3^{2}4^{3}56^{2}7
1^{3}2^{3}3^{2}4^{2}5^{2}6^{2}7
1^{4}2^{3}3^{2}4^{3}56^{2}7
1^{3}2^{3}3^{2}4^{3}5^{2}6^{2}7
1^{4}2^{3}3^{3}4^{3}56^{2}7
1^{4}2^{3}3^{2}4^{3}5^{2}6^{2}7
1^{4}2^{4}3^{2}4^{3}5^{2}6^{2}7
1^{4}2^{3}3^{3}4^{3}5^{2}6^{2}7
1^{4}2^{4}3^{3}4^{3}5^{2}6^{2}7
1^{5}2^{4}3^{3}4^{3}5^{2}6^{2}7
1^{5}2^{4}3^{3}4^{4}5^{2}6^{2}7
1^{5}2^{4}3^{3}4^{4}5^{2}6^{3}7
1^{5}2^{4}3^{3}4^{4}5^{2}6^{3}7^{2}

# rank 8
# nr 1
1
2
3
4
5
6
7
8
12
13
14
25
36
57
78
123
124
125
134
136
257
578
1234
1235
1236
1245
1257
1346
2578
1^{2}234
12345
12346
12356
12357
12457
12578
1^{2}2345
1^{2}2346
123456
123457
123567
123578
124578
1^{2}2^{2}345
1^{2}23^{2}46
1^{2}23456
1^{2}23457
1234567
1234578
1235678
1^{2}2^{2}3456
1^{2}2^{2}3457
1^{2}23^{2}456
1^{2}234567
1^{2}234578
12345678
1^{2}2^{2}3^{2}456
1^{2}2^{2}345^{2}7
1^{2}2^{2}34567
1^{2}2^{2}34578
1^{2}23^{2}4567
1^{2}2345678
1^{3}2^{2}3^{2}456
1^{2}2^{2}3^{2}4567
1^{2}2^{2}345^{2}67
1^{2}2^{2}345^{2}78
1^{2}2^{2}345678
1^{2}23^{2}45678
1^{3}2^{2}3^{2}4^{2}56
1^{3}2^{2}3^{2}4567
1^{2}2^{2}3^{2}45^{2}67
1^{2}2^{2}3^{2}45678
1^{2}2^{2}345^{2}678
1^{2}2^{2}345^{2}7^{2}8
1^{3}2^{2}3^{2}4^{2}567
1^{3}2^{2}3^{2}45^{2}67
1^{3}2^{2}3^{2}45678
1^{2}2^{2}3^{2}45^{2}678
1^{2}2^{2}345^{2}67^{2}8
1^{3}2^{3}3^{2}45^{2}67
1^{3}2^{2}3^{2}4^{2}5^{2}67
1^{3}2^{2}3^{2}4^{2}5678
1^{3}2^{2}3^{2}45^{2}678
1^{2}2^{2}3^{2}45^{2}67^{2}8
1^{3}2^{3}3^{2}4^{2}5^{2}67
1^{3}2^{3}3^{2}45^{2}678
1^{3}2^{2}3^{2}4^{2}5^{2}678
1^{3}2^{2}3^{2}45^{2}67^{2}8
1^{4}2^{3}3^{2}4^{2}5^{2}67
1^{3}2^{3}3^{2}4^{2}5^{2}678
1^{3}2^{3}3^{2}45^{2}67^{2}8
1^{3}2^{2}3^{2}4^{2}5^{2}67^{2}8
1^{4}2^{3}3^{3}4^{2}5^{2}67
1^{4}2^{3}3^{2}4^{2}5^{2}678
1^{3}2^{3}3^{2}4^{2}5^{2}67^{2}8
1^{3}2^{3}3^{2}45^{3}67^{2}8
1^{4}2^{3}3^{3}4^{2}5^{2}6^{2}7
1^{4}2^{3}3^{3}4^{2}5^{2}678
1^{4}2^{3}3^{2}4^{2}5^{2}67^{2}8
1^{3}2^{3}3^{2}4^{2}5^{3}67^{2}8
1^{4}2^{3}3^{3}4^{2}5^{2}6^{2}78
1^{4}2^{3}3^{3}4^{2}5^{2}67^{2}8
1^{4}2^{3}3^{2}4^{2}5^{3}67^{2}8
1^{4}2^{4}3^{2}4^{2}5^{3}67^{2}8
1^{4}2^{3}3^{3}4^{2}5^{3}67^{2}8
1^{4}2^{3}3^{3}4^{2}5^{2}6^{2}7^{2}8
1^{4}2^{4}3^{3}4^{2}5^{3}67^{2}8
1^{4}2^{3}3^{3}4^{2}5^{3}6^{2}7^{2}8
1^{5}2^{4}3^{3}4^{2}5^{3}67^{2}8
1^{4}2^{4}3^{3}4^{2}5^{3}6^{2}7^{2}8
1^{5}2^{4}3^{3}4^{3}5^{3}67^{2}8
1^{5}2^{4}3^{3}4^{2}5^{3}6^{2}7^{2}8
1^{5}2^{4}3^{4}4^{2}5^{3}6^{2}7^{2}8
1^{5}2^{4}3^{3}4^{3}5^{3}6^{2}7^{2}8
1^{5}2^{4}3^{4}4^{3}5^{3}6^{2}7^{2}8
1^{6}2^{4}3^{4}4^{3}5^{3}6^{2}7^{2}8
1^{6}2^{5}3^{4}4^{3}5^{3}6^{2}7^{2}8
1^{6}2^{5}3^{4}4^{3}5^{4}6^{2}7^{2}8
1^{6}2^{5}3^{4}4^{3}5^{4}6^{2}7^{3}8
1^{6}2^{5}3^{4}4^{3}5^{4}6^{2}7^{3}8^{2}

)FX";

const std::uint64_t kFixtureChecksum = 0x94f10e40e9faa32cull;

// Tabulated invariants per system; aut_order is the standard reflection
// group order of the label.
const char* const kTable1Csv = R"TB(rank,nr,n_positive,n_root_sets,n_objects,group_label,aut_order
3,1,10,5,60,A1xA2,12
3,2,10,10,60,A2,6
3,3,11,9,72,A1xA1xA1,8
3,4,12,21,84,A1xA1,4
3,5,12,14,84,A2,6
3,6,13,4,96,G2xA1,24
3,7,13,12,96,A1xA1xA1,8
3,8,13,2,96,B3,48
3,9,13,2,96,B3,48
3,10,14,56,112,A1,2
3,11,15,16,128,A1xA1xA1,8
3,12,16,36,144,A1xA1,4
3,13,16,24,144,A2,6
3,14,17,10,160,A1xB2,16
3,15,17,10,160,B2xA1,16
3,16,17,10,160,C2xA1,16
3,17,18,30,180,A2,6
3,18,18,90,180,A1,2
3,19,19,25,200,A1xA1xA1,8
3,20,19,8,192,G2xA1,24
3,21,19,50,200,A1xA1,4
3,22,19,25,200,A1xA1xA1,8
3,23,19,8,192,G2xA1,24
3,24,20,27,216,C2,8
3,25,20,110,220,A1,2
3,26,20,110,220,A1,2
3,27,21,15,240,A1xC2,16
3,28,21,30,240,A1xA1xA1,8
3,29,21,5,240,C3,48
3,30,22,44,264,A2,6
3,31,25,42,336,A1xA1xA1,8
3,32,25,14,336,A1xG2,24
3,33,25,28,336,A1xA2,12
3,34,25,7,336,B3,48
3,35,26,182,364,A1,2
3,36,26,182,364,A1,2
3,37,27,49,392,A1xA1xA1,8
3,38,27,98,392,A1xA1,4
3,39,27,98,392,A1xA1,4
3,40,28,420,420,1,1
3,41,28,210,420,A1,2
3,42,28,70,420,A2,6
3,43,29,56,448,A1xA1xA1,8
3,44,29,112,448,A1xA1,4
3,45,29,112,448,A1xA1,4
3,46,30,238,476,A1,2
3,47,31,21,504,A1xG2,24
3,48,31,21,504,A1xG2,24
3,49,34,102,612,A2,6
3,50,37,15,720,B3,48
4,1,15,10,360,A2xA2,36
4,2,17,10,480,B3,48
4,3,18,6,576,B3xA1,96
4,4,21,36,864,A3,24
4,5,22,10,960,C3xA1,96
4,6,24,1,1152,F4,1152
4,7,25,12,1440,A4,120
4,8,28,20,1920,B3xA1,96
4,9,30,16,2304,G2xG2,144
4,10,32,28,2688,B3xA1,96
4,11,32,7,2688,B4,384
5,1,25,6,4320,A5,720
5,2,30,12,8640,A5,720
5,3,33,15,11520,B4xA1,768
5,4,41,7,26880,B5,3840
5,5,46,56,40320,A5,720
5,6,49,21,48384,F4xA1,2304
6,1,36,1,51840,E6,51840
6,2,46,7,161280,D6,23040
6,3,63,14,725760,E6,51840
6,4,68,21,967680,B6,46080
7,1,63,1,2903040,E7,2903040
7,2,91,8,23224320,E7,2903040
8,1,120,1,696729600,E8,696729600
)TB";

const std::uint64_t kTable1Checksum = 0xc7ec1227dc73348bull;

}  // namespace weyl::detail
