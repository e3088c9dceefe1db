from FPT_Triangles import utils as utils
from FPT_Triangles import errors as errors
from FPT_Triangles import oracle as oracle
from FPT_Triangles import listing as listing
from FPT_Triangles import kernels as kernels
from FPT_Triangles import solvers as solvers
from FPT_Triangles import cliquewidth as cliquewidth
from FPT_Triangles import hardness as hardness
from FPT_Triangles import generators as generators

from FPT_Triangles.Graph import graph as graph
from FPT_Triangles.Graph import structure as structure
from FPT_Triangles.Graph import cotree as cotree
from FPT_Triangles import cli as cli
