# CliffGroups - exact Clifford algebra representations and Lie group classification
