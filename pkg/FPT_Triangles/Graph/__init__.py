from FPT_Triangles.Graph import graph as graph
from FPT_Triangles.Graph import cotree as cotree
from FPT_Triangles.Graph import structure as structure
