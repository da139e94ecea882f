pub const ALGEBRA: &str = "\
ALGEBRA FILE
  elements <name>+
  arrow
  <name>: <name>{n}        one row per element; row r, column c holds r->c
  compose                  optional, same shape as arrow
  <name>: <name>{n}
  const one <name>         optional
  const id <name>          optional
  const zero <name>        optional
  '#' starts a comment; blank lines are ignored. Unknown names, wrong row
  lengths and duplicate sections, rows or constants are parse errors.";

pub const REPRESENTATION: &str = "\
REPRESENTATION FILE
  base <n>                 points 0..n-1; must come first
  top (i,j) (k,l) ...
  map <name> = (i,j) ...   one line per element
  mode absolute|relative   optional, default relative
  profile <items>          optional, comma list of arrow, compose,
                           strict-identity, zero-empty; default arrow,compose
                           when the algebra has compose, else arrow";

pub const POSET: &str = "\
POSET FILE
  base <n>
  leq (i,j) ...            any number of lines; reflexive pairs are implied";

pub const PAIRS: &str = "\
PAIR LISTS
  Relations given on the command line use the same syntax as the files:
  \"(0,1) (1,1)\". The empty string is the empty relation.";

pub const EXIT: &str = "\
EXIT STATUS
  0 pass, found or true
  1 fail, exhausted or false
  2 usage or parse error
  3 resource limit reached
  4 precondition violated";
