#include <sstream>

#include "dgad/domain.hpp"

namespace dgad {

namespace {

// Subset of widely used public-suffix rules, frozen for offline
// determinism. Pass a full list file to the CLI when coverage matters.
const char kSnapshot[] = R"(// builtin public-suffix snapshot (subset)
com
net
org
io
info
biz
edu
gov
mil
int
uk
co.uk
org.uk
ac.uk
gov.uk
me.uk
net.uk
br
com.br
net.br
org.br
gov.br
edu.br
jp
co.jp
ne.jp
or.jp
ac.jp
au
com.au
net.au
org.au
edu.au
de
fr
it
nl
es
pt
pl
ru
ch
at
be
se
no
fi
dk
cz
eu
us
ca
mx
com.mx
ar
com.ar
cn
com.cn
in
co.in
nz
co.nz
net.nz
org.nz
za
co.za
*.ck
!www.ck
)";

} // namespace

const SuffixTable& builtin_suffix_table() {
    static const SuffixTable table = [] {
        std::istringstream in(kSnapshot);
        return load_suffix_table(in, "builtin:psl-subset@2025-11-26");
    }();
    return table;
}

} // namespace dgad
