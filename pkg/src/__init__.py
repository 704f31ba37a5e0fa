# Waring rank toolkit
